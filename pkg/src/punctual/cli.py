"""Command line front end.

Every verb reads typed flags, runs one computation, and emits canonical
structured text (or JSON with --format json); identical invocations give
byte-identical output.  Exit status: 0 on success and passing checks, 1
when a verification fails, 2 on bad input.
"""

import argparse
import itertools
import json
import random
import sys

from .axioms import run_axiom_suite
from .genfun import (IDENTITY_NAMES, curve_series, gamma_integral_series,
                     nonsep_vertical_series, verify_identity, vertical_series)
from .hopf import (element_from_obj, element_pretty, element_to_obj,
                   tensor_pretty, tensor_to_obj)
from .rational import format_rational, parse_rational
from .series import MultiSeries
from .symfunc import parse_chern_arg
from .theories import eval_theory, theory_from_spec


def _load_json_arg(text):
    """Inline JSON, @path, or - for stdin."""
    if text == "-":
        return json.load(sys.stdin)
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def parse_theory_string(text):
    """Parse a theory argument: "builtin:ck,k=2", "mult_class:1,1,1/2",
    inline JSON, or @file with the JSON form."""
    if text.startswith("@") or text.startswith("{"):
        return _load_json_arg(text)
    head, _, rest = text.partition(":")
    if head == "builtin":
        parts = [p.strip() for p in rest.split(",") if p.strip()]
        if not parts:
            raise ValueError("builtin theory needs a name")
        spec = {"builtin": parts[0]}
        for p in parts[1:]:
            key, eq, v = p.partition("=")
            if not eq:
                raise ValueError("malformed theory option %r" % p)
            spec[key.strip()] = int(v)
        return spec
    if head == "mult_class":
        return {"mult_class": [c.strip() for c in rest.split(",")]}
    raise ValueError("unrecognized theory string %r" % text)


def _desc_vectors(d, cap):
    """Weakly decreasing exponent vectors in {0..cap}^d, graded order."""
    vecs = [tuple(reversed(c)) for c in
            itertools.combinations_with_replacement(range(cap + 1), d)]
    return sorted(vecs, key=lambda v: (sum(v), v))


def _element_caps(x):
    n_cap, m_cap = 1, 0
    for mon in x.terms:
        for g in mon:
            if x.variant == "sep":
                n_cap = max(n_cap, g[0])
                m_cap = max(m_cap, max(g[1], default=0))
            else:
                m_cap = max(m_cap, max(g, default=0))
    return n_cap, m_cap


def _build_theory(args, d, n_cap, m_cap, variant="sep"):
    spec = parse_theory_string(args.theory)
    if spec.get("builtin") == "dt":
        m_cap = max(m_cap, n_cap - 1)
    return theory_from_spec(spec, d, n_cap, m_cap, variant=variant)


def _need(args, name, flag):
    if getattr(args, name) is None:
        raise ValueError("this verb needs %s" % flag)
    return getattr(args, name)


# -- verbs -----------------------------------------------------------------

def _run_table(args):
    e = _build_theory(args, args.d, args.max_n, args.max_m,
                      variant=args.variant)
    rows, lines = [], []
    if args.variant == "sep":
        for n in range(1, args.max_n + 1):
            for m in _desc_vectors(args.d, args.max_m):
                v = format_rational(e.value(n, m))
                rows.append({"n": n, "m": list(m), "value": v})
                lines.append("q_{%d,(%s)}: %s" %
                             (n, ",".join(str(x) for x in m), v))
    else:
        for lam in _desc_vectors(args.d, args.max_m):
            v = format_rational(e.nonsep_value(lam))
            rows.append({"lambda": list(lam), "value": v})
            lines.append("q_{(%s)}: %s" %
                         (",".join(str(x) for x in lam), v))
    obj = {"d": args.d, "variant": args.variant, "theory": e.label,
           "values": rows}
    return obj, "\n".join(lines), 0


def _run_eval(args):
    x = element_from_obj(_load_json_arg(args.element))
    if args.d is not None and args.d != x.d:
        raise ValueError("--d %d does not match element d=%d" % (args.d, x.d))
    n_cap, m_cap = _element_caps(x)
    e = _build_theory(args, x.d, n_cap, m_cap, variant=x.variant)
    v = format_rational(eval_theory(e, x))
    return {"value": v}, v, 0


def _element_verb(method):
    def run(args):
        x = element_from_obj(_load_json_arg(args.element))
        y = getattr(x, method)()
        return element_to_obj(y), element_pretty(y), 0
    return run


def _run_coproduct(args):
    x = element_from_obj(_load_json_arg(args.element))
    t = x.coproduct()
    return tensor_to_obj(t), tensor_pretty(t), 0


def _run_vertical(args):
    chern = parse_chern_arg(args.d, args.chern)
    if args.variant == "nonsep":
        e = _build_theory(args, args.d, args.order, args.d, variant="nonsep")
        s = nonsep_vertical_series(e, chern, args.order)
    else:
        e = _build_theory(args, args.d, args.order, args.order - 1 + args.d)
        s = vertical_series(e, chern, args.order, path=args.path)
    return s.to_obj(), s.pretty(), 0


def _run_curve(args):
    e = _build_theory(args, 1, args.order, args.order)
    s = curve_series(e, parse_rational(args.chi), args.order)
    return s.to_obj(), s.pretty(), 0


def _run_gamma(args):
    chern = parse_chern_arg(args.d, args.chern)
    e = _build_theory(args, args.d, args.order, args.order - 1 + args.d)
    series, report = gamma_integral_series(e, chern, args.order)
    obj = {"series": series.to_obj(), "report": report.to_obj()}
    return obj, series.pretty() + "\n" + report.pretty(), 0


def _run_verify(args):
    name = args.name
    n_max = args.order
    params = {"n_max": n_max}
    if name == "curve-vertical":
        _need(args, "theory", "--theory")
        e = _build_theory(args, 1, n_max, n_max)
        params.update(theory=e, chi=parse_rational(_need(args, "chi", "--chi")))
    elif name == "inertial-power":
        d = _need(args, "d", "--d")
        coeffs = [parse_rational(c) for c in
                  _need(args, "unit_class", "--class").split(",")]
        cap = max(len(coeffs) - 1, 1)
        P = MultiSeries(("U",), (cap,),
                        {(j,): c for j, c in enumerate(coeffs)})
        params.update(P=P, chern=parse_chern_arg(d, _need(args, "chern",
                                                          "--chern")))
    elif name == "dt-degree-zero":
        params.update(chern=parse_chern_arg(3, _need(args, "chern",
                                                     "--chern")))
    elif name == "ck-bivariate":
        params.update(k=_need(args, "k", "--k"),
                      m_max=args.m_max if args.m_max is not None else n_max)
    elif name == "gamma-vertical":
        d = _need(args, "d", "--d")
        _need(args, "theory", "--theory")
        e = _build_theory(args, d, n_max, n_max - 1 + d)
        params.update(theory=e,
                      chern=parse_chern_arg(d, _need(args, "chern",
                                                     "--chern")))
    report = verify_identity(name, **params)
    return report.to_obj(), report.pretty(), 0 if report.passed else 1


def _run_axioms(args):
    dims = (args.d,) if args.d is not None else (1, 2, 3)
    variants = (("sep", "nonsep") if args.variant == "both"
                else (args.variant,))
    rng = random.Random(args.seed)
    try:
        counts = run_axiom_suite(rng, dims=dims, variants=variants,
                                 count=args.count,
                                 max_cycle_degree=args.max_cycle_degree)
    except AssertionError as exc:
        return ({"passed": False, "detail": str(exc)},
                "passed: false\n%s" % exc, 1)
    lines = ["passed: true"]
    lines += ["%s: %d" % (k, v) for k, v in counts.items()]
    return {"passed": True, "checks": counts}, "\n".join(lines), 0


# -- wiring ----------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="punctual",
        description="Tautological Hopf algebras of 0-cycles in d-folds: "
                    "tables, basis changes, invariant series, checks.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, func, **kw):
        p = sub.add_parser(verb, **kw)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write to this path instead of stdout")
        return p

    p = add("table", _run_table, help="generator values of a theory")
    p.add_argument("--theory", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--variant", choices=("sep", "nonsep"), default="sep")

    p = add("eval", _run_eval, help="pair a theory with an element")
    p.add_argument("--theory", required=True)
    p.add_argument("--element", required=True,
                   help="inline JSON, @file, or - for stdin")
    p.add_argument("--d", type=int)

    for verb, method, blurb in (("to-p", "to_p", "rewrite in the p basis"),
                                ("to-q", "to_q", "rewrite in the q basis"),
                                ("antipode", "antipode", "apply the antipode")):
        p = add(verb, _element_verb(method), help=blurb)
        p.add_argument("--element", required=True)

    p = add("coproduct", _run_coproduct, help="coproduct of a q-basis element")
    p.add_argument("--element", required=True)

    p = add("vertical", _run_vertical, help="invariant series of the "
                                            "symmetric-power classes")
    p.add_argument("--theory", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chern", required=True,
                   help='e.g. "c3=4,c1c2=24" or "m21=12,m111=4"')
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--path", choices=("both", "pair", "exp"), default="both")
    p.add_argument("--variant", choices=("sep", "nonsep"), default="sep")

    p = add("curve", _run_curve, help="curve-count series (d = 1)")
    p.add_argument("--theory", required=True)
    p.add_argument("--chi", required=True)
    p.add_argument("--order", type=int, required=True)

    p = add("gamma-integral", _run_gamma,
            help="log of the vertical series via the gamma integral")
    p.add_argument("--theory", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chern", required=True)
    p.add_argument("--order", type=int, required=True)

    p = add("verify", _run_verify, help="check a named series identity")
    p.add_argument("--name", required=True, choices=IDENTITY_NAMES)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--theory")
    p.add_argument("--chi")
    p.add_argument("--chern")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--class", dest="unit_class",
                   help="unit class coefficients, e.g. 1,2,1/3")

    p = add("axioms", _run_axioms, help="run the Hopf axiom suite")
    p.add_argument("--d", type=int)
    p.add_argument("--variant", choices=("sep", "nonsep", "both"),
                   default="both")
    p.add_argument("--count", type=int, default=60)
    p.add_argument("--max-cycle-degree", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        obj, text, status = args.func(args)
    except (ValueError, KeyError, TypeError, ArithmeticError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    payload = (json.dumps(obj, indent=2) if args.format == "json" else text)
    payload += "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return status


if __name__ == "__main__":
    sys.exit(main())
