"""abct command line: sampling, membership, posets, positroid utilities and
the verification suite.  JSON goes to stdout, progress to stderr."""
import argparse
import json
import os
import sys

from . import checks, forms
from .membership import failing_quartic, in_V3n, in_stratum
from .pluecker import NotGrassmannianPoint, RationalMatrix, pluecker_of
from .positroid import (BoundedAffinePermutation, bcfw_chart_coords, bcfw_factorization,
                        bcfw_matrix, compose_factorization, necklace_from_perm, validate)
from .strata import (Stratum, act, dihedral_elements, dihedral_orbits, enumerate_strata,
                     poset, sample_stratum)
from .veronese import sample_on_V, sample_positive_gr2, seeded_params


class UsageError(Exception):
    pass


def _load_json_arg(text):
    """A JSON literal or the path of a file holding one."""
    if os.path.exists(text):
        with open(text) as fh:
            return json.load(fh)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"not a JSON value or readable file: {text!r}") from exc


def _stratum_arg(text, n=None):
    try:
        s = Stratum.from_json(_load_json_arg(text))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad stratum: {exc}") from exc
    if n is not None and s.n != n:
        raise UsageError(f"stratum has n = {s.n}, expected {n}")
    return s


# -- subcommands ----------------------------------------------------------------

def cmd_sample(a):
    if a.kind == "tp-gr2":
        return sample_positive_gr2(a.n, seeded_params(a.n, a.seed)).to_json(), 0
    if a.kind == "on-v":
        return sample_on_V(a.n, seeded_params(a.n, a.seed)).to_json(), 0
    if a.stratum:
        s = _stratum_arg(a.stratum, a.n)
    else:
        pool = enumerate_strata(a.n, 1)
        s = pool[a.seed % len(pool)]
    out = sample_stratum(s, seed=a.seed).to_json()
    out["stratum"] = s.to_json()
    return out, 0


def cmd_membership(a):
    try:
        M = RationalMatrix.from_json(_load_json_arg(a.matrix))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad matrix: {exc}") from exc
    inv = in_V3n(M)
    out = {"in_v": inv}
    if not inv:
        out["failing_quartic"] = list(failing_quartic(pluecker_of(M)))
    verdicts = []
    for text in a.stratum or []:
        s = _stratum_arg(text, M.n)
        verdicts.append({"stratum": s.label(), "member": in_stratum(M, s)})
    out["stratum_verdicts"] = verdicts
    ok = inv and all(v["member"] for v in verdicts)
    return out, 0 if ok else 1


def _dihedral_quotient(P):
    """Orbit representatives and deduplicated edges between orbits."""
    index = {s: i for i, s in enumerate(P.nodes)}
    orbit_of, reps = {}, []
    for rep, size in dihedral_orbits(P.nodes):
        k = len(reps)
        reps.append((rep, size))
        for g in dihedral_elements(P.n):
            orbit_of[index[act(g, rep)]] = k
    edges = sorted({(orbit_of[a], orbit_of[b]) for a, b in P.edges})
    return reps, edges


def cmd_poset(a):
    P = poset(a.n, a.max_codim)
    if not a.dihedral:
        return (P.to_dot() if a.emit == "dot" else P.to_json()), 0
    reps, edges = _dihedral_quotient(P)
    codims = [P.grading[P.nodes.index(r)] for r, _ in reps]
    if a.emit == "dot":
        lines = ["digraph poset {", "  rankdir=TB;"]
        for c in sorted(set(codims)):
            lines += [f"  subgraph cluster_codim{c} {{", "    rank=same;", f'    label="codim {c}";']
            for i, ((r, size), g) in enumerate(zip(reps, codims)):
                if g == c:
                    lines.append(f'    n{i} [label="{r.label()} x{size}"];')
            lines.append("  }")
        lines += [f"  n{b} -> n{a_};" for a_, b in edges] + ["}"]
        return "\n".join(lines) + "\n", 0
    return {"n": a.n, "dihedral": True,
            "nodes": [dict(r.to_json(), id=i, codim=c, label=r.label(), orbit_size=size)
                      for i, ((r, size), c) in enumerate(zip(reps, codims))],
            "edges": [list(e) for e in edges]}, 0


def _int_list(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_necklace(a):
    f = BoundedAffinePermutation(_int_list(a.perm))
    if f.n != a.n:
        raise UsageError(f"permutation has {f.n} entries, expected n = {a.n}")
    k = validate(f)
    N = necklace_from_perm(f)
    return {"n": a.n, "k": k, "perm": f.to_list(), "necklace": N.labels()}, 0


def cmd_bcfw(a):
    if a.emit == "matrix":
        return {"m": a.m, "n": a.n,
                "rows": [[e.to_str() for e in row] for row in bcfw_matrix(a.m, a.n)]}, 0
    if a.emit == "coords":
        rules = bcfw_chart_coords(a.m, a.n)
        return {"m": a.m, "n": a.n, "coords": {k: str(v) for k, v in rules.items()}}, 0
    g, word = bcfw_factorization(a.m, a.n)
    f = compose_factorization(g, word)
    return {"m": a.m, "n": a.n, "g": g.to_list(), "word": word, "length": len(word),
            "f": f.to_list()}, 0


def _verify_report(a):
    ident, n = a.identity, a.n
    need_n = ident not in ("n6", "boundary-decomposition", "v47")
    if need_n and n is None:
        raise UsageError(f"verify {ident} needs --n")
    if ident == "pushforward":
        return forms.verify_pushforward(n)
    if ident == "inductive":
        return forms.verify_inductive(n)
    if ident == "residue":
        return forms.verify_residue_bcfw(n, a.m or 3)
    if ident == "n6":
        return forms.verify_n6()
    if ident == "scaling":
        return forms.verify_scaling(n, a.column or 4)
    if ident == "frame-choice":
        return forms.verify_frame_choice(n)
    if ident == "expressions":
        return forms.verify_omega_expressions(n)
    if ident == "gale":
        return checks.verify_gale(n, k=a.k, seed=a.seed)
    if ident == "supermodularity":
        return checks.verify_supermodularity(n, seed=a.seed)
    if ident == "boundary-decomposition":
        return checks.verify_boundary_decomposition(seed=a.seed)
    return checks.verify_v47(seed=a.seed)


def cmd_verify(a):
    print(f"abct: running {a.identity}", file=sys.stderr)
    rep = _verify_report(a)
    print(f"abct: {a.identity} {rep['status']} in {rep['timing']} s", file=sys.stderr)
    if a.no_timing:
        rep.pop("timing")
    return rep, 0 if rep["status"] == "pass" else 1


def cmd_orbit(a):
    if a.stratum:
        s = _stratum_arg(a.stratum, a.n)
        members = sorted({act(g, s) for g in dihedral_elements(s.n)}, key=lambda t: t.label())
        return {"n": s.n, "stratum": s.label(), "orbit_size": len(members),
                "orbit": [t.label() for t in members]}, 0
    strata = enumerate_strata(a.n, a.max_codim)
    orbits = dihedral_orbits(strata)
    return {"n": a.n, "max_codim": a.max_codim, "strata": len(strata), "orbits": len(orbits),
            "representatives": [dict(r.to_json(), label=r.label(), orbit_size=size)
                                for r, size in orbits]}, 0


VERIFY_CHOICES = ["pushforward", "inductive", "residue", "n6", "scaling", "gale",
                  "supermodularity", "boundary-decomposition", "frame-choice",
                  "expressions", "v47"]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    p = argparse.ArgumentParser(prog="abct", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sample", parents=[common], help="seeded sample matrices")
    s.add_argument("--kind", required=True, choices=["tp-gr2", "on-v", "stratum"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--stratum", help="stratum JSON (or file) for --kind stratum")
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("membership", parents=[common], help="test a matrix against V(3,n)")
    s.add_argument("--matrix", required=True, help="matrix JSON file (or literal)")
    s.add_argument("--stratum", action="append", help="stratum JSON; may be repeated")
    s.set_defaults(func=cmd_membership)

    s = sub.add_parser("poset", parents=[common], help="boundary stratum poset")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-codim", type=int, default=2)
    s.add_argument("--emit", choices=["json", "dot"], default="json")
    s.add_argument("--dihedral", action="store_true", help="quotient by the dihedral group")
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("necklace", parents=[common], help="Grassmann necklace of a permutation")
    s.add_argument("--perm", required=True, help="window f(1),...,f(n), comma separated")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_necklace)

    s = sub.add_parser("bcfw", parents=[common], help="BCFW data of Z(1..m|m+1..n)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--emit", choices=["matrix", "coords", "word"], default="matrix")
    s.set_defaults(func=cmd_bcfw)

    s = sub.add_parser("verify", parents=[common], help="run an exact identity check")
    s.add_argument("identity", choices=VERIFY_CHOICES)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int, default=3, help="row count for gale")
    s.add_argument("--column", type=int, help="scaled column for scaling (default 4)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("orbit", parents=[common], help="dihedral orbits of strata")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--max-codim", type=int, default=1)
    s.add_argument("--stratum", help="list the orbit of this stratum instead")
    s.set_defaults(func=cmd_orbit)
    return p


def run(argv=None):
    p = build_parser()
    try:
        a = p.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        out, code = a.func(a)
    except (UsageError, ValueError, NotGrassmannianPoint) as exc:
        print(f"abct {a.command}: error: {exc}", file=sys.stderr)
        return 2
    text = out if isinstance(out, str) else json.dumps(out, indent=2) + "\n"
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
