"""Hereditarily finite sets and the first stages of the hierarchies.

Run with ``python demos/finite_stages.py``.
"""

from ordforge import eval_bounded, parse_formula, parse_hfset, sat_stage, stage
from ordforge.hierarchy import stage_size


def main():
    print("Stage sizes grow as a tower of twos:")
    for n in range(6):
        print(f"  stage {n}: {stage_size(n)} sets")
    print()

    print("Stage 3 written out:")
    for x in stage(3):
        print("  ", x)
    print()

    two = parse_hfset("{{},{{}}}")
    f = parse_formula("(all x in a) (ex y in a) (x in y | x = y)")
    print("formula:", "(all x in a) (ex y in a) (x in y | x = y)")
    print("holds for a = {{},{{}}}:", eval_bounded(f, {"a": two}))
    print()

    sentence = parse_formula("ex x . ex y . x in y")
    for n in range(1, 4):
        print(f"'some set has a member' holds in L({n}):", sat_stage(sentence, n))

    powerset = parse_formula("ex z . (all x sub V(1)) x in z", "ikpp")
    print("a set containing every subset of V(1) exists in V(3):",
          sat_stage(powerset, 3, "ikpp"))


if __name__ == "__main__":
    main()
