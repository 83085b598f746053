# # Sign words and their alternating blocks
#
# Everything in freetl is colored by a word over {+, -}.  This walk-through
# shows the operations on words: the star involution, rotation, the five
# word classes, and the split of a word into maximal alternating blocks.

from freetl.word import Word, all_words, classify, mas_decompose, mas_parity_split, rotate

w = Word.parse("+--++--+")
print("word     ", w)
print("star     ", w.star())
print("rotate 3 ", rotate(w, 3))
print("class    ", classify(w).name)


# Blocks break exactly where two neighbouring signs agree.

blocks = mas_decompose(w).blocks
print("blocks   ", " | ".join(map(str, blocks)))


# For a balanced, non-alternating word whose ends agree the block count is
# even, so the blocks split into an odd-indexed and an even-indexed half.

odd, even = mas_parity_split(w)
print("odd half ", odd)
print("even half", even)


# How the 64 words of length 6 distribute over the classes:

from collections import Counter

print(Counter(classify(v).name for v in all_words(6)))
