"""Generates a synthetic headline share dataset (CSV headline,fb_shares,tw_shares).

Headlines are assembled from templates; share counts are drawn from a
Poisson model whose rate depends on sentiment words, people, places and
headline length, so the regression models have real structure to learn.

    python3 tools/synthetic_shares.py --n 1000 --seed 7 --out data/shares_synthetic.csv
"""

import argparse
import csv
import math
import random

PEOPLE = ["Enda Kenny", "Micheál Martin", "Gerry Adams", "Leo Varadkar", "Simon Coveney",
          "Katie Taylor", "Rory McIlroy", "Johnny Sexton", "Joe Schmidt", "Roy Keane",
          "Michael D Higgins", "Conor McGregor", "Mary Lou McDonald", "Jim Gavin"]
PLACES = ["Dublin", "Cork", "Galway", "Limerick", "Belfast", "Kerry", "Mayo", "Athlone",
          "London", "Brussels", "Boston", "Sligo", "Wexford", "Donegal"]
ORGS = ["HSE", "Ryanair", "Irish Water", "Fine Gael", "Fianna Fáil", "Sinn Féin", "GAA",
        "Central Bank", "Aer Lingus", "RTÉ", "Luas", "Focus Ireland"]
POSITIVE = ["wins", "celebrates", "welcomes", "praised", "triumph", "delighted", "boost",
            "hope", "brilliant", "success"]
NEGATIVE = ["crisis", "tragic", "fury", "shock", "scandal", "warns", "fears", "chaos",
            "collapse", "outrage"]
NEUTRAL = ["meets", "plans", "says", "report", "review", "talks", "visits", "opens",
           "announces", "considers"]
NOUNS = ["budget", "housing plan", "hospital beds", "water charges", "new route",
         "final", "strike", "election", "rent rules", "match", "schools", "jobs"]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]

TEMPLATES = [
    "{person} {verb} {noun}",
    "{person} {verb} {noun} in {place}",
    "{org} {verb} {noun}",
    "{org} {verb} {noun} in {place}",
    "{noun} {verb} as {person} visits {place}",
    "{place} {noun} {verb}",
    "{person} and {org} {verb} {noun} on {day}",
    "{verb} {noun} for {place} families",
    "{org} {verb} {noun} after {person} intervention",
    "{noun} {verb} on {day}",
]


def headline(rng):
    tone = rng.random()
    if tone < 0.3:
        verb = rng.choice(POSITIVE)
    elif tone < 0.6:
        verb = rng.choice(NEGATIVE)
    else:
        verb = rng.choice(NEUTRAL)
    text = rng.choice(TEMPLATES).format(
        person=rng.choice(PEOPLE), place=rng.choice(PLACES), org=rng.choice(ORGS),
        noun=rng.choice(NOUNS), verb=verb, day=rng.choice(DAYS))
    text = text[0].upper() + text[1:]
    return text, verb


def poisson(rng, lam):
    # Knuth's method; rates here stay small.
    limit, k, p = math.exp(-lam), 0, 1.0
    while True:
        p *= rng.random()
        if p <= limit:
            return k
        k += 1


def shares(rng, text, verb):
    words = text.split()
    n = len(words)
    people = sum(1 for p in PEOPLE if p in text)
    places = sum(1 for p in PLACES if p in text)
    neg = verb in NEGATIVE
    pos = verb in POSITIVE
    day = any(d in words for d in DAYS)
    fb_rate = math.exp(0.9 + 0.8 * neg + 0.4 * pos + 0.5 * people - 0.04 * n
                       + (0.6 if neg and people else 0.0) + 0.3 * day)
    tw_rate = math.exp(0.2 + 0.5 * neg + 0.2 * pos + 0.4 * places + 0.3 * people - 0.03 * n
                       + (0.5 if pos and places else 0.0))
    return poisson(rng, fb_rate), poisson(rng, tw_rate)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    with open(args.out, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["headline", "fb_shares", "tw_shares"])
        for _ in range(args.n):
            text, verb = headline(rng)
            fb, tw = shares(rng, text, verb)
            w.writerow([text, fb, tw])


if __name__ == "__main__":
    main()
