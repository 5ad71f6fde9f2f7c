#!/usr/bin/env python3
"""How the (m, n) pairs up to a bound split across the structural cases.

Also breaks the non-null pairs down by predicted chromatic class and by
diameter note, which shows how often each branch of the theory fires.
"""
import argparse
from collections import Counter

from idealgraph.formulas import CaseTag, predict
from idealgraph.verify import sweep_pairs


def census(m_max: int):
    cases, classes, notes = Counter(), Counter(), Counter()
    for pair in sweep_pairs(m_max):
        pred = predict(pair)
        cases[pred.case] += 1
        if not pred.is_null:
            classes[pred.chromatic_class] += 1
            notes[pred.diameter_note] += 1
    return cases, classes, notes


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m-max", type=int, default=2000)
    args = p.parse_args(argv)

    cases, classes, notes = census(args.m_max)
    total = sum(cases.values())
    print(f"pairs with m <= {args.m_max}: {total}")
    for tag in CaseTag:
        print(f"  {tag.value:<28}{cases[tag]:>7}{100 * cases[tag] / total:>8.1f}%")
    print("chromatic class (non-null):")
    for cls, k in sorted(classes.items(), key=lambda kv: kv[0].value):
        print(f"  {cls.value:<28}{k:>7}")
    print("diameter note (non-null):")
    for note, k in sorted(notes.items(), key=lambda kv: kv[0].value):
        print(f"  {note.value:<28}{k:>7}")


if __name__ == "__main__":
    main()
