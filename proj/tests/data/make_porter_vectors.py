#!/usr/bin/env python3
"""Freezes reference stems from NLTK's PorterStemmer in ORIGINAL_ALGORITHM mode.

Output: porter_vectors.tsv with `word<TAB>stem<TAB>stem of the stem` lines. The
third column records where the algorithm is not idempotent.
"""
from pathlib import Path

from nltk.stem.porter import PorterStemmer

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent.parent

CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring sing conflated troubled
sized hopping tanned falling hissing fizzed failing filing happy sky relational conditional rational
valenci hesitanci digitizer conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti sensitiviti sensibiliti
triplicate formative formalize electriciti electrical hopeful goodness revival allowance inference
airliner gyroscopic adjustable defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate cease controll roll
generalizations oscillators inequality inequity a as is us i be bli logi abli archaeology
apology biology sensibly generously knightly ion nation fixation adoption opinion union
running runner ran rung generously dying lying tying meeting meetings stemming stemmed
corresponding correspondence misunderstanding hysterical hysterically happiness happily
agreement agreements disagreement feeling feelings emotional emotionally emotions emotion
anger angry angrily sadness sadly sad joyful joyfully joy trusting trusted trust fearful
fearfully fearing surprise surprised surprisingly disgust disgusting disgusted anticipation
anticipate anticipating amplify amplifying weaken weakening abandon abandoned abandonment
y yy ay ey oy""".split()


def main():
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    words = set(CLASSIC)
    words |= set((ROOT / "data" / "sample" / "dictionary.txt").read_text().split())
    lines = [f"{w}\t{stemmer.stem(w)}\t{stemmer.stem(stemmer.stem(w))}" for w in sorted(words)]
    (HERE / "porter_vectors.tsv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
