"""
Vertices of the middle levels graph as triples
==============================================

Every vertex of levels n and n+1 of the (2n+1)-cube is a rotated
Dyck word followed by one extra bit.
"""

from middlelevels import Triple, dyck_words, triple_decode, triple_encode

n = 2

# Dyck words of length 2n: balanced, never more 0s than 1s in a prefix
nuts = list(dyck_words(n))
print("nuts:", nuts)

# <x, b, s> is x followed by b, rotated right s times
for x in nuts:
    row = [triple_encode(Triple(x, 0, s)) for s in range(2 * n + 1)]
    print(x, "->", " ".join(row))

# decoding recovers the unique triple of any vertex
print(triple_decode("01010"))
print(triple_decode("11010"))
