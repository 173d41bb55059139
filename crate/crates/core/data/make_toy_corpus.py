"""Regenerates toy_corpus.txt. Frequent words clear the default
threshold of 10; the rare misspellings stay below it."""
import random

FREQUENT = """گرت گرتم گرتن کەوتن دەکەون دەگرن گرتیانن کتێب کتێبەکە ماڵ ماڵەکان
ناو جوان ئاسان ئاسانتر گەورە زۆر من منیش ئەو دوو سێ بەڵام لە کوردستان هەولێر
بەهار نووسران مهرج بووک وتن تهنها دهتوانین""".split()
RARE = "مرج بوک ووتن دهتواین گرتمکەوتن تهنیا".split()

rng = random.Random(20)
tokens = []
for word in FREQUENT:
    tokens += [word] * rng.randint(10, 40)
for word in RARE:
    tokens += [word] * rng.randint(1, 9)
rng.shuffle(tokens)

lines = []
while tokens:
    n = rng.randint(5, 12)
    sentence, tokens = tokens[:n], tokens[n:]
    lines.append(" ".join(sentence) + rng.choice([".", "،", "؟", "!"]))
with open("toy_corpus.txt", "w", encoding="utf-8") as f:
    f.write("\n".join(lines) + "\n")
