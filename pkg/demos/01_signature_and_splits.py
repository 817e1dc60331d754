"""Two-column members, their signature, residue, and the two splits.

Builds the running example over the 4|n alphabet: a member of the a=3 class
whose right column can slide down exactly one row, walks through the
signature computation, and prints both splits computed two ways (operator
powers and the box-sliding algorithms).
"""

from ospd import make_alphabet, classify_pair, lr_split, star_split, is_admissible
from ospd.osptab import lr_split_sliding, star_split_sliding, valid_slide_offsets
from ospd.signature import merged_pair_word, sigma_pair

A = make_alphabet("super", 4, 6)
L = lambda *names: tuple(A.parse(s) for s in names)

T = classify_pair(L("b4", "b1", "1/2", "3/2", "3/2"),
                  L("b3", "b2", "3/2", "5/2"), 3)
print("member of the a=3 class:")
print("  left  column:", T.left)
print("  right column:", T.right)
print("  shape lambda(a,b,c) =", T.shape())

word = merged_pair_word(T.left, T.right)
print("\nmerged decreasing word (letter, source):")
print(" ", [(a.name, s) for a, s in word])
print("signature sigma(L, R) =", tuple(sigma_pair(T.left, T.right)))
print("residue r_T =", T.residue,
      "(valid slide offsets:", valid_slide_offsets(T.left, T.right, 3), ")")

lt, rt = lr_split(T)
print("\nsplit (LT, RT) by raising powers:   ", lt, rt)
print("split (LT, RT) by the slide algorithm:", *lr_split_sliding(T))

ls, rs = star_split(T)
print("\nstar split (L*, R*) by one lowering:", ls, rs)
print("star split by the slide algorithm:   ", *star_split_sliding(T))

S = classify_pair(L("b1", "5/2", "7/2", "9/2"), L("b2", "b1", "7/2", "9/2"), 2)
print("\nadjacent member of the a=2 class with residue", S.residue)
print("admissible (T < S)?", is_admissible(T, S))
