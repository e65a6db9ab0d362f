"""Command-line interface: ``langdualkit <group> <verb> [options]``.

Exit status is 0 on success, 1 when a verification reports a failure and
2 on usage or input errors. Every JSON document carries ``"schema": "v1"``.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import affine_weyl as aw
from . import central_books as cb
from . import oracles
from . import unipotent_lab as ul
from . import weight_mult as wm
from .cache import CharacterCache, default_cache_dir
from .root_datum import (
    DatumError,
    RootDatum,
    dualize,
    highest_short_coroot,
    longest_element,
    resolve_datum,
    torsion_invariants,
    weyl_orbit,
)

SCHEMA = "v1"


class UsageError(Exception):
    pass


# --- argument parsing ---------------------------------------------------------


def parse_vector(text: str) -> tuple[int, ...]:
    """``"1,-1"``, ``"[1, -1]"`` or ``"1 -1"`` -> ``(1, -1)``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    parts = [p for p in body.replace(",", " ").split() if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed integer vector {text!r}") from None


def _vector(d: RootDatum, text: str | None, name: str):
    if text is None:
        raise UsageError(f"--{name} is required")
    v = parse_vector(text)
    if len(v) != d.rank:
        raise UsageError(f"--{name} needs {d.rank} entries, got {len(v)}")
    return v


def _element(d: RootDatum, text: str | None, name: str) -> aw.AffineWeylElt:
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{name} is not valid JSON: {exc}") from None
    try:
        return aw.from_json(d, doc)
    except aw.AffineWeylError as exc:
        raise UsageError(str(exc)) from None


def _datum(args) -> RootDatum:
    if not args.datum:
        raise UsageError("--datum is required")
    try:
        return resolve_datum(args.datum)
    except (DatumError, OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _globals(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "tsv", "text"), default=default("text"))
    parser.add_argument("--cache", default=default(None), help="character cache directory")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for sampled checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="langdualkit", description=__doc__.splitlines()[0])
    _globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, suppress=True)
    groups = parser.add_subparsers(dest="command_group", required=True)

    def verbs(name, names):
        sub = groups.add_parser(name).add_subparsers(dest="verb", required=True)
        return {v: sub.add_parser(v, parents=[common]) for v in names}

    for p in verbs("datum", ("validate", "dual", "classify", "torsion")).values():
        p.add_argument("--datum")
        p.add_argument("--side", choices=("roots", "coroots"), default="roots")

    p = verbs("primes", ("report",))["report"]
    p.add_argument("--datum")
    p.add_argument("--l", type=int, required=True)

    for p in verbs("weyl", ("length", "word", "bruhat", "min-rep", "iw-order", "omega")).values():
        p.add_argument("--datum")
        p.add_argument("--w")
        p.add_argument("--v")
        p.add_argument("--lambda", dest="lam")
        p.add_argument("--mu")

    for p in verbs("weights", ("set", "mult", "level", "grading", "layers")).values():
        p.add_argument("--datum")
        p.add_argument("--lambda", dest="lam")
        p.add_argument("--mu")

    for p in verbs("unipotent", ("jordan", "fixed", "centdim")).values():
        p.add_argument("--group", required=True)
        p.add_argument("--l", type=int, required=True)
        p.add_argument("--module", default=None)

    v = verbs("verify", ("qmin", "two-step", "multiplicities", "bruhat-oracle", "length-oracle"))
    v["qmin"].add_argument("--family", required=True)
    v["qmin"].add_argument("--n", type=int, required=True)
    v["qmin"].add_argument("--l", type=int, required=True)
    v["two-step"].add_argument("--datum")
    v["two-step"].add_argument("--alpha", type=int, default=None)
    v["multiplicities"].add_argument("--datum")
    v["multiplicities"].add_argument("--max-level", type=int, default=8)
    v["bruhat-oracle"].add_argument("--datum")
    v["bruhat-oracle"].add_argument("--max-len", type=int, default=6)
    v["bruhat-oracle"].add_argument(
        "--samples", type=int, default=0, help="check this many seeded random pairs (0: all pairs)"
    )
    v["length-oracle"].add_argument("--datum")
    v["length-oracle"].add_argument("--max-len", type=int, default=8)
    return parser


# --- commands ---------------------------------------------------------------------
# Each returns (result, text, ok).


def cmd_datum(args):
    d = _datum(args)
    if args.verb == "validate":
        res = {
            "valid": True,
            "rank": d.rank,
            "semisimple_rank": d.semisimple_rank,
            "cartan_matrix": d.cartan_matrix,
            "components": [c.label for c in d.components],
            "hash": d.content_hash,
        }
        text = f"valid rank={d.rank} components={','.join(res['components']) or '-'} hash={d.content_hash}"
        return res, text, True
    if args.verb == "dual":
        res = dualize(d).to_json()
        return res, json.dumps(res, sort_keys=True), True
    if args.verb == "classify":
        res = [{"type": c.label, "indices": list(c.indices)} for c in d.components]
        text = " ".join(f"{c['type']}{c['indices']}" for c in res) or "-"
        return res, text, True
    res = torsion_invariants(d, args.side)
    return res, json.dumps(res), True


def cmd_primes(args):
    d = _datum(args)
    try:
        rep = cb.theorem_report(d, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = rep.to_json()
    lines = [f"l={args.l} theorem_main_ok={_b(rep.theorem_main_ok)}"]
    lines.append(f"torsion roots={list(rep.torsion_roots)} coroots={list(rep.torsion_coroots)}")
    lines.append(
        f"center_smooth={_b(rep.center_smooth)} centralizer_smooth={_b(rep.centralizer_smooth)}"
    )
    header = ("type", "bound", "bound_ok", "qmin_ok", "good", "very_good")
    rows = [header] + [
        (c.type, str(c.bound), _b(c.bound_ok), _b(c.qmin_ok), _b(c.good), _b(c.very_good))
        for c in rep.components
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    lines += [f"note: {n}" for n in rep.notes]
    return res, "\n".join(lines), True


def _b(x: bool) -> str:
    return "true" if x else "false"


def cmd_weyl(args):
    d = _datum(args)
    verb = args.verb
    if verb == "length":
        w = _element(d, args.w, "w")
        return {"length": w.length}, str(w.length), True
    if verb == "word":
        w = _element(d, args.w, "w")
        try:
            word = aw.reduced_word(w)
        except aw.AffineWeylError as exc:
            raise UsageError(str(exc)) from None
        return {"word": word}, json.dumps(word), True
    if verb == "omega":
        w = _element(d, args.w, "w")
        dec = aw.omega_decompose(w)
        res = {"omega": dec.omega.to_json(), "cox": dec.cox.to_json(), "cox_word": list(dec.cox_word)}
        text = f"omega={json.dumps(res['omega'])} cox_word={json.dumps(res['cox_word'])}"
        return res, text, True
    if verb == "bruhat":
        v, w = _element(d, args.v, "v"), _element(d, args.w, "w")
        r = aw.bruhat_leq(v, w)
        return {"leq": r}, _b(r), True
    if verb == "min-rep":
        lam = _vector(d, args.lam, "lambda")
        w = aw.min_coset_rep(d, lam)
        res = {"element": w.to_json(), "length": w.length}
        return res, f"{json.dumps(res['element'])} length={w.length}", True
    lam, mu = _vector(d, args.lam, "lambda"), _vector(d, args.mu, "mu")
    r = aw.iw_closure_leq(d, lam, mu)
    return {"leq": r}, _b(r), True


def _cache(args) -> CharacterCache:
    return CharacterCache(default_cache_dir(args.cache))


def _table_text(tbl: wm.MultTable) -> str:
    return "\n".join(f"{json.dumps(e['weight'])}\t{e['mult']}" for e in tbl.to_json())


def cmd_weights(args):
    d = _datum(args)
    lam = _vector(d, args.lam, "lambda")
    verb = args.verb
    if verb == "level":
        n = wm.level(d, lam)
        return {"level": n}, str(n), True
    if verb == "set":
        ws = sorted(wm.weight_set(d, lam))
        return {"weights": [list(w) for w in ws]}, "\n".join(json.dumps(list(w)) for w in ws), True
    if not d.is_dominant(lam):
        raise UsageError(f"--lambda {list(lam)} is not dominant")
    char = wm.weyl_character(d, lam, _cache(args))
    if verb == "mult":
        if args.mu is not None:
            m = char[_vector(d, args.mu, "mu")]
            return {"mult": m}, str(m), True
        return {"table": char.to_json(), "total": char.total}, _table_text(char), True
    if verb == "grading":
        g = wm.wakimoto_grading(char)
        return {"table": g.to_json(), "total": g.total}, _table_text(g), True
    layers = wm.filtration_layers(char)
    dims = wm.filtration_dims(char)
    res = {
        "layers": [
            {"level": n, "dim": t.total, "cumulative": dims[n], "table": t.to_json()}
            for n, t in sorted(layers.items(), reverse=True)
        ]
    }
    text = "\n".join(
        f"level={n} dim={t.total} F={dims[n]} "
        + " ".join(f"{json.dumps(list(w))}:{m}" for w, m in sorted(t.nonzero().items()))
        for n, t in sorted(layers.items(), reverse=True)
    )
    return res, text, True


def cmd_unipotent(args):
    try:
        g = ul.parse_group(args.group, args.l)
        u = ul.regular_unipotent(g)
        if args.verb == "centdim":
            lie = args.module
            if lie in (None, "adjoint"):
                lie = {"SL": "sl", "PGL": "pgl", "Sp": "sp", "SO": "so"}[g.kind]
            n = ul.lie_centralizer_dim(g, u, lie)
            return {"group": g.label, "l": g.p, "lie": lie, "dim": n}, str(n), True
        mat = ul.module_action(g, u, args.module or "natural")
    except ul.UnipotentError as exc:
        raise UsageError(str(exc)) from None
    module = args.module or "natural"
    if args.verb == "jordan":
        jt = ul.jordan_type(mat)
        res = {"group": g.label, "l": g.p, "module": module, "partition": jt.to_json()}
        return res, json.dumps(jt.to_json()), True
    n = ul.fixed_dim(mat)
    return {"group": g.label, "l": g.p, "module": module, "fixed_dim": n}, str(n), True


def cmd_verify(args):
    return VERIFY[args.verb](args)


def verify_qmin(args):
    try:
        r = cb.qmin_verification(args.family, args.n, args.l)
    except (cb.QminRefused, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = f"dim_Vu={r.dim_Vu} dim_V0={r.dim_V0} {'ok' if r.ok else 'FAIL'}"
    return r.to_json(), text, r.ok


def verify_two_step(args):
    d = _datum(args)
    alphas = range(d.semisimple_rank) if args.alpha is None else [args.alpha]
    results = []
    try:
        for a in alphas:
            results.append(cb.two_step_check(d, a, _cache(args)))
    except (wm.WeightError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.ok for r in results)
    lines = [
        f"alpha={r.alpha} varpi={json.dumps(list(r.varpi))} r={r.r} "
        f"top={_compact(r.top_layer)} next={_compact(r.next_layer)} {'ok' if r.ok else 'FAIL'}"
        for r in results
    ]
    return {"checks": [r.to_json() for r in results], "ok": ok}, "\n".join(lines), ok


def _compact(tbl):
    return "{" + ",".join(f"{json.dumps(list(w))}:{m}" for w, m in sorted(tbl.nonzero().items())) + "}"


def verify_multiplicities(args):
    d = _datum(args)
    if not d.is_semisimple:
        raise UsageError("verify multiplicities needs a semisimple datum")
    cache = _cache(args)
    lams = wm.dominant_weights_up_to_level(d, args.max_level)
    w0 = longest_element(d)
    failures = []
    for lam in lams:
        char = wm.weyl_character(d, lam, cache)
        if any(char[x] != v for mu, v in char.nonzero().items() for x in weyl_orbit(d, mu)):
            failures.append(f"{list(lam)}: not W_f-invariant")
        if char.total != oracles.weyl_dimension(d, lam):
            failures.append(f"{list(lam)}: total {char.total} != Weyl dimension")
        if char.support != wm.weight_set(d, lam):
            failures.append(f"{list(lam)}: support differs from the weight set")
        grad = wm.wakimoto_grading(char)
        if grad.total != char.total or any(grad[mu] != char[w0(mu)] for mu in grad.support | char.support):
            failures.append(f"{list(lam)}: Wakimoto grading mismatch")
    dual = dualize(d)
    qmin = []
    for comp, dcomp in zip(d.components, dual.components):
        th = highest_short_coroot(d, comp)
        char = wm.weyl_character(d, th, cache)
        zero = char[(0,) * d.rank]
        expect = wm.zero_weight_dim_qmin(dcomp)
        orbit_ok = all(char[mu] == 1 for mu in weyl_orbit(d, th))
        qmin.append({"component": comp.label, "zero_weight": zero, "short_simple_roots": expect})
        if zero != expect or not orbit_ok:
            failures.append(f"{comp.label}: quasi-minuscule zero weight {zero} != {expect}")
    ok = not failures
    res = {"weights_checked": len(lams), "quasi_minuscule": qmin, "failures": failures, "ok": ok}
    text = f"checked {len(lams)} dominant weights up to level {args.max_level}; " + (
        "ok" if ok else "FAIL\n" + "\n".join(failures)
    )
    return res, text, ok


def verify_length_oracle(args):
    d = _datum(args)
    if not d.is_semisimple:
        raise UsageError("the length oracle needs a semisimple datum")
    ball = oracles.bfs_ball(d, args.max_len)
    mismatches = [
        w
        for w, k in sorted(ball.items(), key=_elt_key)
        if w.length != k or oracles.alcove_length(w) != k
    ]
    exhaustive = oracles.im_ball(d, args.max_len)
    ok = not mismatches and exhaustive == set(ball)
    res = {
        "elements": len(ball),
        "mismatches": [w.to_json() for w in mismatches],
        "ball_matches_exhaustive_search": exhaustive == set(ball),
        "ok": ok,
    }
    text = f"{len(ball)} elements of length <= {args.max_len}: " + ("ok" if ok else "FAIL")
    return res, text, ok


def _elt_key(item):
    w, k = item
    return (k, w.translation, w.finite.word)


def verify_bruhat_oracle(args):
    d = _datum(args)
    if not d.is_semisimple:
        raise UsageError("the Bruhat oracle needs a semisimple datum")
    ball = oracles.bfs_ball(d, args.max_len)
    words = oracles.reduced_words_by_bfs(ball, d)
    elts = [w for w, _ in sorted(ball.items(), key=_elt_key)]
    lower = {w: oracles.subword_lower_set(d, *words[w]) for w in elts}
    if args.samples:
        rng = random.Random(args.seed)
        pairs = [(rng.choice(elts), rng.choice(elts)) for _ in range(args.samples)]
    else:
        pairs = [(v, w) for v in elts for w in elts]
    bad = [(v, w) for v, w in pairs if aw.bruhat_leq(v, w) != (v in lower[w])]
    ok = not bad
    res = {
        "elements": len(elts),
        "pairs": len(pairs),
        "disagreements": [[v.to_json(), w.to_json()] for v, w in bad[:20]],
        "ok": ok,
    }
    text = f"{len(pairs)} pairs over {len(elts)} elements of length <= {args.max_len}: " + (
        "ok" if ok else f"FAIL ({len(bad)} disagreements)"
    )
    return res, text, ok


VERIFY = {
    "qmin": verify_qmin,
    "two-step": verify_two_step,
    "multiplicities": verify_multiplicities,
    "bruhat-oracle": verify_bruhat_oracle,
    "length-oracle": verify_length_oracle,
}

COMMANDS = {
    "datum": cmd_datum,
    "primes": cmd_primes,
    "weyl": cmd_weyl,
    "weights": cmd_weights,
    "unipotent": cmd_unipotent,
    "verify": cmd_verify,
}


# --- output -------------------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _tsv(result) -> str:
    if isinstance(result, dict):
        return "\n".join(f"{k}\t{_cell(v)}" for k, v in result.items())
    if isinstance(result, list):
        return "\n".join(json.dumps(x, sort_keys=True) for x in result)
    return str(result)


def render(args, result, text) -> str:
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": f"{args.command_group} {args.verb}", "result": result}
        return json.dumps(doc, sort_keys=True)
    if args.format == "tsv":
        return _tsv(result)
    return text


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=stderr)
    try:
        result, text, ok = COMMANDS[args.command_group](args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(render(args, result, text), file=stdout)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
