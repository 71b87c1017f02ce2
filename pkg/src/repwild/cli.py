"""Command line front end: ``repwild <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg
from . import combinatorics as comb
from . import io, zoo
from .errors import RepWildError, SchemaError
from .fields import FieldDescriptor, make_field

USAGE, FAILURE = 1, 2

FAMILIES = ("truncated_poly", "matrix_units", "upper_triangular", "cyclic_group", "elementary_abelian",
            "restricted_enveloping", "quantum_nilpotent", "taft", "hecke_typeA")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_field(text):
    """Q, F<p>, F<p>:<c0,c1,...> (extension by a monic modulus) or C<ell> (cyclotomic)."""
    t = text.strip()
    try:
        if t in ("Q", "QQ"):
            return make_field(FieldDescriptor.rationals())
        if t[0] in "Cc":
            return make_field(FieldDescriptor.cyclotomic(int(t[1:])))
        if t[0] in "Ff":
            head, _, mod = t[1:].partition(":")
            if mod:
                return make_field(FieldDescriptor.extension(int(head), [int(c) for c in mod.split(",")]))
            return make_field(FieldDescriptor.prime(int(head)))
    except ValueError:
        pass
    raise UsageError(f"cannot parse field {text!r}")


def _ints(text):
    return [int(x) for x in str(text).split(",") if x != ""]


def build_zoo(family, params):
    """Construct a zoo algebra from string (or plain) parameters."""
    p = {k: v for k, v in params.items()}

    def field(default=None):
        f = p.get("field")
        if f is None:
            return default
        return parse_field(f) if isinstance(f, str) else f

    def num(key, default=None):
        if key not in p:
            if default is None:
                raise UsageError(f"{family} needs parameter {key}")
            return default
        return int(p[key])

    if family == "truncated_poly":
        return zoo.truncated_poly(num("ell"), field())
    if family == "matrix_units":
        return zoo.matrix_units(num("n"), field())
    if family == "upper_triangular":
        return zoo.upper_triangular(num("n"), field())
    if family == "cyclic_group":
        return zoo.cyclic_group_algebra(num("n"), field())
    if family == "elementary_abelian":
        pr = num("p")
        return zoo.elementary_abelian_group_algebra(pr, num("r"), field(make_field(FieldDescriptor.prime(pr))))
    if family == "restricted_enveloping":
        pr = num("p")
        lie = p.get("lie", "sl2")
        if lie == "sl2":
            data = zoo.sl2_data(pr, tuple(_ints(p.get("chi", "0,0,0"))))
        elif lie in ("abelian", "toral"):
            n = num("n", 1)
            data = zoo.abelian_data(n, _ints(p.get("chi", ",".join("0" * n))), toral=lie == "toral")
        else:
            raise UsageError(f"unknown restricted Lie algebra {lie!r}")
        return zoo.restricted_enveloping(data, make_field(FieldDescriptor.prime(pr)))
    if family == "quantum_nilpotent":
        q = p.get("q")
        return zoo.quantum_nilpotent(p.get("type", "A2"), num("ell"), field(), None if q is None else int(q))
    if family == "taft":
        ell = num("ell")
        F = field() or zoo.make_field_cyclotomic(ell)
        R = zoo.quantum_nilpotent("A1", ell, F, None if p.get("q") is None else int(p["q"]))
        return zoo.smash_group(R, [ell], [zoo.scaling_action(R, R._cache["q"])], name=f"taft({ell})")
    if family == "hecke_typeA":
        F = field() or make_field(FieldDescriptor.rationals())
        return zoo.hecke_typeA(num("n"), F(p.get("q", "1") if isinstance(p.get("q"), str) else p.get("q", 1)), F)
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# -- helpers --------------------------------------------------------------------------

def _algebra(args):
    src = args.algebra_opt or args.algebra
    if not src:
        raise UsageError("an algebra file is required")
    return io.load_algebra(src)


def _module(A, spec):
    from .modrep import regular_module, simple_modules, trivial_module

    if spec in (None, "trivial", "k"):
        if A.augmentation is None:
            raise UsageError("algebra has no augmentation; pass --module")
        return trivial_module(A)
    if spec == "regular":
        return regular_module(A)
    if spec.startswith("simple:"):
        return simple_modules(A).simples[int(spec.split(":", 1)[1])]
    return io.load_module(spec, A)


def _emit(args, obj, text):
    out = io.dumps(obj) if args.format == "json" else text.rstrip("\n") + "\n"
    sys.stdout.write(out)


def _parents():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--window", type=int, default=16)
    common.add_argument("--budget", type=int, default=None)
    alg_p = _Parser(add_help=False)
    alg_p.add_argument("algebra", nargs="?")
    alg_p.add_argument("--algebra", dest="algebra_opt")
    return common, alg_p


def build_parser():
    common, alg_p = _parents()
    ap = _Parser(prog="repwild", description="Homological invariants and wildness verdicts for "
                 "finite dimensional algebras.")
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    z = sub.add_parser("zoo", parents=[common], help="build zoo algebras")
    zs = z.add_subparsers(dest="zoo_cmd", parser_class=_Parser)
    zb = zs.add_parser("build", parents=[common], help="write a zoo algebra and companion modules")
    zb.add_argument("family", choices=FAMILIES)
    zb.add_argument("params", nargs="*", help="key=value parameters, e.g. ell=3 field=F7")
    zb.add_argument("-o", "--output", required=True)

    v = sub.add_parser("validate", parents=[common, alg_p], help="check the algebra (and module) axioms")
    v.add_argument("--module")
    sub.add_parser("blocks", parents=[common, alg_p], help="block decomposition")
    sub.add_parser("selfinj", parents=[common, alg_p], help="self-injectivity test")
    r = sub.add_parser("resolve", parents=[common, alg_p], help="minimal projective resolution")
    r.add_argument("--module", default="trivial")
    e = sub.add_parser("ext", parents=[common, alg_p], help="dim Ext^n(M, N)")
    e.add_argument("--module", default="trivial")
    e.add_argument("--target", default=None, help="defaults to the module itself")
    h = sub.add_parser("hh", parents=[common, alg_p], help="Hochschild cohomology dimensions")
    h.add_argument("--oracle", action="store_true", help="also run the bar-complex oracle")
    c = sub.add_parser("cx", parents=[common, alg_p], help="complexity of a module")
    c.add_argument("--module", default="trivial")
    c.add_argument("--consistency", action="store_true")
    rp = sub.add_parser("report", parents=[common, alg_p], help="wildness verdict")
    rp.add_argument("--module", default="trivial")
    rp.add_argument("--fg-override", action="store_true")
    rp.add_argument("--consistency", action="store_true")
    rp.add_argument("--batch")
    rp.add_argument("--workers", type=int, default=None)
    hb = sub.add_parser("hecke-blocks", parents=[common], help="type A Hecke blocks from l-cores")
    hb.add_argument("--r", type=int, required=True)
    hb.add_argument("--ell", type=int, required=True)
    bd = sub.add_parser("bd-verdict", parents=[common], help="types B/D principal block rule")
    bd.add_argument("--r", type=int, required=True)
    bd.add_argument("--ell", type=int, required=True)
    pc = sub.add_parser("pointed-check", parents=[common], help="pointed Hopf datum hypotheses")
    pc.add_argument("datum")
    return ap


# -- subcommands ------------------------------------------------------------------------

def cmd_zoo(args):
    if args.zoo_cmd != "build":
        raise UsageError("usage: repwild zoo build <family> [key=value ...] -o file.json")
    params = {}
    for item in args.params:
        k, sep, v = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not key=value")
        params[k] = v
    A = build_zoo(args.family, params)
    out = Path(args.output)
    io.store_algebra(A, out)
    written = [str(out)]
    stem = out.with_suffix("")
    if A.augmentation is not None:
        from .modrep import trivial_module
        p = Path(f"{stem}.trivial.json")
        io.store_module(trivial_module(A), p)
        written.append(str(p))
    if A.dim <= 32:
        from .modrep import simple_modules
        for i, S in enumerate(simple_modules(A).simples):
            p = Path(f"{stem}.simple{i}.json")
            io.store_module(S, p)
            written.append(str(p))
    _emit(args, {"algebra": A.name, "dim": A.dim, "files": written},
          f"{A.name} (dim {A.dim})\n" + "\n".join(f"  wrote {w}" for w in written))
    return 0


def cmd_validate(args):
    A = _algebra(args)
    diag = alg.validate(A, seed=args.seed)
    viol = list(diag.violations)
    if diag.ok and args.module:
        viol = [dict(v, scope="module") for v in _module(A, args.module).validate()]
    ok = not viol
    _emit(args, {"algebra": A.name, "ok": ok, "violations": viol},
          f"{A.name}: {'valid' if ok else 'INVALID'}" + "".join(f"\n  {v}" for v in viol))
    return 0 if ok else FAILURE


def cmd_blocks(args):
    A = _algebra(args)
    B = alg.block_decomposition(A)
    F = A.field
    fails = B.check()
    obj = {"algebra": A.name, "count": len(B), "dims": [b.dim for b in B.blocks], "principal": B.principal,
           "idempotents": [[F.to_json(F.decode(c)) for c in e] for e in B.idempotents],
           "check": [list(f) for f in fails]}
    text = [f"{A.name}: {len(B)} block(s)"]
    for i, b in enumerate(B.blocks):
        text.append(f"  block {i}: dim {b.dim}" + (" (principal)" if i == B.principal else ""))
    if fails:
        text.append(f"  idempotent check failed: {fails}")
    _emit(args, obj, "\n".join(text))
    return 0 if not fails else FAILURE


def cmd_selfinj(args):
    A = _algebra(args)
    s = alg.is_self_injective(A)
    _emit(args, dict(s.to_json(), algebra=A.name),
          f"{A.name}: self-injective {str(s.value).lower()} (dim A* {s.dim_dual}, projective cover {s.dim_cover})")
    return 0


def cmd_resolve(args):
    from .resolution import minimal_resolution
    A = _algebra(args)
    M = _module(A, args.module)
    res = minimal_resolution(M, args.window, budget=args.budget)
    _emit(args, dict(res.to_json(), algebra=A.name, module=M.name),
          f"{A.name} / {M.name}: dims {res.dims}")
    return 0


def cmd_ext(args):
    from .resolution import ext_dims
    A = _algebra(args)
    M = _module(A, args.module)
    N = M if args.target is None else _module(A, args.target)
    t = ext_dims(M, N, args.window, budget=args.budget)
    _emit(args, dict(t.to_json(), algebra=A.name), f"dim Ext^n({M.name}, {N.name}): {t.dims}")
    return 0


def cmd_hh(args):
    from .hochschild import bar_hh_oracle, hh_dims
    A = _algebra(args)
    t = hh_dims(A, args.window, budget=args.budget)
    obj = {"algebra": A.name, "dims": t.dims, "window": args.window}
    text = f"dim HH^n({A.name}): {t.dims}"
    status = 0
    if args.oracle:
        o = bar_hh_oracle(A, min(args.window, 4))
        agree = o.dims == t.dims[:len(o.dims)]
        obj["oracle"] = {"dims": o.dims, "agree": agree}
        text += f"\nbar oracle: {o.dims} ({'agree' if agree else 'DISAGREE'})"
        status = 0 if agree else FAILURE
    _emit(args, obj, text)
    return status


def cmd_cx(args):
    from .growth import complexity, cx_consistency
    A = _algebra(args)
    M = _module(A, args.module)
    rep = complexity(A, M, args.window, args.budget)
    obj = dict(rep.to_json(), algebra=A.name, module=M.name)
    text = str(rep)
    if args.consistency:
        c = cx_consistency(A, M, args.window, args.budget, res=rep.resolution)
        obj["consistency"] = c.to_json()
        text += f"\nconsistency: {c.values()} ({'agree' if c.agree else 'disagree'})"
    _emit(args, obj, text)
    return 0


def cmd_report(args):
    from .report import batch_report, wildness_report
    if args.batch:
        spec = json.loads(Path(args.batch).read_text())
        entries = spec.get("entries", []) if isinstance(spec, dict) else spec
        for e in entries:
            e.setdefault("window", args.window)
        results = batch_report(entries, Path(args.batch).parent, args.workers)
        lines = [f"[{r['index']}] " + (r["text"] if r["ok"] else "error: " + r["error"]) for r in results]
        _emit(args, {"results": results}, "\n".join(lines) if lines else "empty batch")
        return 0 if all(r["ok"] for r in results) else FAILURE
    A = _algebra(args)
    M = _module(A, args.module)
    v = wildness_report(A, M, args.window, args.fg_override, args.budget, args.consistency)
    text = str(v) + "".join(f"\n  note: {n}" for n in v.notes)
    _emit(args, v.to_json(), text)
    return 0


def cmd_hecke_blocks(args):
    rep = comb.hecke_blocks_typeA(args.r, args.ell)
    _emit(args, rep.to_json(), str(rep))
    return 0


def cmd_bd(args):
    v = comb.principal_block_BD_verdict(args.r, args.ell)
    _emit(args, v.to_json(), str(v))
    return 0


def cmd_pointed(args):
    D = io.load_datum(args.datum)
    v = comb.pointed_datum_check(D)
    _emit(args, v.to_json(), str(v))
    return 0


COMMANDS = {"zoo": cmd_zoo, "validate": cmd_validate, "blocks": cmd_blocks, "selfinj": cmd_selfinj,
            "resolve": cmd_resolve, "ext": cmd_ext, "hh": cmd_hh, "cx": cmd_cx, "report": cmd_report,
            "hecke-blocks": cmd_hecke_blocks, "bd-verdict": cmd_bd, "pointed-check": cmd_pointed}


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not args.cmd:
            raise UsageError(ap.format_usage().strip())
        if getattr(args, "window", 16) < 4 and args.cmd not in ("hh",):
            raise UsageError("--window must be at least 4")
        if getattr(args, "budget", None) is not None and args.budget <= 0:
            raise UsageError("--budget must be positive")
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return USAGE
    except (RepWildError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
