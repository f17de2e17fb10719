"""From a finite derivation to an ordinal bound.

The script loads the derivation of the Infinity sentence for each theory,
checks it, prints the bound of every node and the chain that ends with the
final ordinal.  Run with ``python demos/proof_to_bound.py``.
"""

import os

from ordforge import analyze_sigma, check, embed_bounds, pretty, print_formula
from ordforge.calculus import load_proof

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "tests", "fixtures")
LABELS = {"ikp": "IKP", "ikpp": "IKP(P)", "ikpe": "IKP(E)"}


def main():
    for theory in ("ikp", "ikpp", "ikpe"):
        d = load_proof(os.path.join(FIXTURES, f"infinity_{theory}.proof"), theory)
        print(f"== {LABELS[theory]} ==")
        print("end sequent: =>", print_formula(d.conclusion.delta[0]))
        report = check(d, theory)
        print("checker:", "ok" if report.ok else report.failures)

        m, annotations = embed_bounds(d, theory)
        for path, ann in annotations.items():
            print(f"  {path:<6} length {pretty(ann.ordinal):<14} cut rank {pretty(ann.cutrank)}")

        chain = analyze_sigma(d, theory).chain()
        print(f"  m = {m}")
        for key in ("embed", "pre_collapse", "gamma_or_sigma", "collapsed", "final"):
            print(f"  {key:<15} {pretty(chain[key])}")
        print()


if __name__ == "__main__":
    main()
