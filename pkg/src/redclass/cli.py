"""Command-line driver: ``redclass classify | oracle | h2 | knutson | selftest``."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import re
import sys

from . import __version__
from .abcoh import h2, module_from_generators, parse_abgroup, trivial_module
from .errors import ParseError, RedclassError, ValidationError
from .fingrp import describe_group, enumerate_homs, parse_group, GroupHom
from .rootdata import build_root_datum, out_group

__all__ = ["main", "RunConfig", "run", "parse_weight", "parse_module_char", "emit"]


@dataclasses.dataclass
class RunConfig:
    subcommand: str
    args: argparse.Namespace
    fmt: str = "json"
    out: str = None
    jobs: int = 1
    deterministic: bool = True   # always on; nothing here is randomized

    def validate(self):
        if self.jobs < 1:
            raise ValidationError("--jobs must be positive")
        p = getattr(self.args, "char", 0) or 0
        if p and (p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1))):
            raise ValidationError(f"characteristic must be 0 or a prime, got {p}")


# -- input grammars -------------------------------------------------------------

_INT_LIST = re.compile(r"\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]")


def parse_weight(text, rank=None):
    """``"[1,0,0,0]"`` -> ``(1, 0, 0, 0)``."""
    s = text.strip()
    m = _INT_LIST.fullmatch(s)
    if not m:
        raise ParseError("expected a weight like [1,0,0,0]", text, 0)
    w = tuple(int(x) for x in re.findall(r"-?\d+", s))
    if rank is not None and len(w) != rank:
        raise ParseError(f"weight has length {len(w)}, rank is {rank}", text, 0)
    return w


def parse_module_char(text, rank=None):
    """``"[1,0]+2*[0,1]"`` or a JSON list of weights -> ``{weight: mult}``."""
    s = text.strip()
    if s.startswith("[["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON ({exc.msg})", text, exc.pos) from None
        out = {}
        for w in data:
            w = parse_weight(json.dumps(w), rank)
            out[w] = out.get(w, 0) + 1
        return out
    out = {}
    pos = 0
    for term in s.split("+"):
        m = re.fullmatch(r"\s*(?:(\d+)\s*\*\s*)?(\[[^\]]*\])\s*", term)
        if not m:
            raise ParseError("expected terms like [1,0] or 2*[0,1]", s, pos)
        w = parse_weight(m.group(2), rank)
        out[w] = out.get(w, 0) + int(m.group(1) or 1)
        pos += len(term) + 1
    return out


def parse_cutoff(text, rank):
    s = text.strip()
    if re.fullmatch(r"\d+", s):
        if rank != 1:
            raise ParseError("an integer cutoff needs rank 1; give a weight like [1,1,0,0]",
                             text, 0)
        return (int(s),)
    return parse_weight(s, rank)


def parse_coupling(text, H, K):
    """``surjective``, ``trivial``, ``index:N`` or a JSON list of images."""
    s = text.strip()
    homs = enumerate_homs(H, K)
    if s == "trivial":
        return homs[0] if all(x == K.identity for x in homs[0].images) else \
            GroupHom(H, K, (K.identity,) * H.order)
    if s == "surjective":
        for h in homs:
            if len(set(h.images)) == K.order:
                return h
        raise ValidationError(f"no surjective coupling from a group of order {H.order} "
                              f"onto Out of order {K.order}")
    m = re.fullmatch(r"index:(\d+)", s)
    if m:
        i = int(m.group(1))
        if i >= len(homs):
            raise ParseError(f"only {len(homs)} couplings", text, 6)
        return homs[i]
    try:
        images = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError("expected surjective, trivial, index:N or a JSON image list",
                         text, exc.pos) from None
    hom = GroupHom(H, K, tuple(int(x) for x in images))
    hom.check()
    return hom


def parse_action(text, H, A):
    """``trivial`` or a JSON list of matrices, one per generator of ``H``."""
    s = text.strip()
    if s == "trivial":
        return trivial_module(H, A)
    try:
        mats = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError("expected 'trivial' or a JSON list of generator matrices",
                         text, exc.pos) from None
    return module_from_generators(H, A, mats)


# -- emission ----------------------------------------------------------------------

def _scalar(v):
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, separators=(",", ":"))
    return "" if v is None else str(v)


def emit(doc, fmt):
    """JSON is canonical; CSV and markdown project its ``rows`` and ``summary``."""
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    rows = doc.get("rows", [])
    summary = doc.get("summary", {})
    cols = list(rows[0].keys()) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if cols:
            w.writerow(cols)
            for r in rows:
                w.writerow([_scalar(r[c]) for c in cols])
        for k, v in summary.items():
            w.writerow([f"# {k}", _scalar(v)])
        return buf.getvalue()
    lines = [f"## redclass {doc['command']} (version {doc['version']})", ""]
    if cols:
        lines.append("| " + " | ".join(cols) + " |")
        lines.append("|" + "---|" * len(cols))
        for r in rows:
            lines.append("| " + " | ".join(_scalar(r[c]) for c in cols) + " |")
        lines.append("")
    for k, v in summary.items():
        lines.append(f"- **{k}**: {_scalar(v)}")
    return "\n".join(lines) + "\n"


def _doc(command, inputs, rows, summary, extra=None):
    d = {"version": __version__, "command": command, "input": inputs,
         "rows": rows, "summary": summary}
    if extra:
        d.update(extra)
    return d


# -- subcommands -----------------------------------------------------------------

def _cmd_classify(a, cfg):
    from .classify import classify

    type_text = a.type or a.pos_type
    group_text = a.group or a.pos_group
    lattice = a.lattice or a.pos_lattice or "sc"
    if not type_text or not group_text:
        raise ParseError("classify needs --type and --group")
    rd = build_root_datum(type_text, lattice)
    H = parse_group(group_text)
    tab = classify(rd, H, a.char, group_label=group_text)
    d = tab.to_dict()
    rows = [{"coupling_image": r["coupling_image"], "coupling_orbit_size": r["coupling_orbit_size"],
             "h2": r["h2"], "stabilizer_order": r["stabilizer_order"], "orbits": r["orbits"],
             "orbit_sizes": r["orbit_sizes"], "split_classes": r["split_classes"],
             "iso_orbits": r["iso_orbits"], "equiv_classes": r["equiv_classes"],
             "coupling_images": r["coupling_images"]} for r in d["rows"]]
    summary = {"total": tab.total, "iso_total": tab.iso_total, "equiv_total": tab.equiv_total}
    return _doc("classify", d["input"], rows, summary)


def _default_datum(A):
    """Datum whose centre torsion is the kernel: C2^2 -> D4, C2^r -> A1^r, Cn -> A_{n-1}."""
    f = A.factors
    if f == (2, 2):
        return "D4"
    if f and all(x == 2 for x in f):
        return "*".join(["A1"] * len(f))
    if len(f) == 1:
        return f"A{f[0] - 1}"
    raise ValidationError(f"no default root datum for kernel {A}; pass --type")


def _cmd_oracle(a, cfg):
    from .classify import classify
    from .extoracle import classify_extensions_bruteforce, transported_couplings

    kernel = a.kernel or a.pos_kernel
    group_text = a.group or a.pos_group
    if not kernel or not group_text:
        raise ParseError("oracle needs --kernel and --group")
    A = parse_abgroup(kernel)
    H = parse_group(group_text)
    confirm = {"auto": None, "yes": True, "no": False}[a.confirm]
    inputs = {"kernel": str(A), "group": group_text, "group_order": H.order}
    if a.action:
        M = parse_action(a.action, H, A)
        cen = classify_extensions_bruteforce(A, H, action=M, confirm=confirm)
        censuses = [("given", cen)]
    elif a.compare:
        rd = build_root_datum(a.type or _default_datum(A), a.lattice)
        inputs.update({"type": rd.label, "lattice": rd.lattice_label})
        reps, img = transported_couplings(rd, H, A, a.char)
        full = classify_extensions_bruteforce(A, H, couplings=reps, confirm=confirm)
        restricted = classify_extensions_bruteforce(A, H, couplings=reps, aut_subgroup=img,
                                                    confirm=confirm)
        censuses = [("aut", full), ("out", restricted)]
    else:
        censuses = [("aut", classify_extensions_bruteforce(A, H, confirm=confirm))]
    rows = []
    for scope, cen in censuses:
        for c in cen.couplings:
            rows.append({"scope": scope, "coupling_images": [int(x) for x in c.coupling.images],
                         "coupling_orbit_size": c.coupling_orbit_size,
                         "equivalence_classes": c.equivalence_count,
                         "isomorphism_classes": c.iso_count,
                         "virtual_classes": c.virtual_count,
                         "class_size": c.class_size, "confirmed": c.confirmed})
    # headline: isomorphism classes of abstract groups (first census)
    summary = {"virtual_total": censuses[0][1].virtual_total}
    for scope, cen in censuses:
        summary[f"{scope}_virtual_total"] = cen.virtual_total
        summary[f"{scope}_iso_total"] = cen.iso_total
        summary[f"{scope}_equivalence_total"] = cen.equivalence_total
    if a.compare:
        tab = classify(rd, H, a.char, group_label=group_text, extra=False)
        out_cen = censuses[1][1]
        per_row = [c.virtual_count for c in out_cen.couplings]
        summary["classify_total"] = tab.total
        summary["classify_orbits"] = [r.orbits for r in tab.rows]
        summary["h2_orders"] = [r.h2.order for r in tab.rows]
        summary["equivalence_matches_h2"] = (
            [c.equivalence_count for c in out_cen.couplings] == [r.h2.order for r in tab.rows])
        summary["agrees_with_classify"] = (per_row == [r.orbits for r in tab.rows]
                                           and out_cen.virtual_total == tab.total)
    return _doc("oracle", inputs, rows, summary)


def _cmd_h2(a, cfg):
    H = parse_group(a.group)
    A = parse_abgroup(a.module)
    M = parse_action(a.action, H, A)
    coh = h2(H, M)
    rows = [{"factor": int(d)} for d in coh.structure.factors]
    summary = {"h2": coh.structure.power_notation(), "structure": str(coh.structure),
               "order": coh.order, "exponent_divides_group_order":
               H.order % coh.structure.exponent == 0}
    return _doc("h2", {"group": a.group, "group_order": H.order, "module": str(A),
                       "action": a.action}, rows, summary)


def _knutson_datum(type_text, lattice):
    from .knutson import semisimple_reduction_note

    spec, note = semisimple_reduction_note(type_text)
    return (build_root_datum(spec, lattice) if spec else None), spec, note


def _cmd_knutson(a, cfg):
    from .knutson import greedy_inverse, knutson_bound, sample_weights

    rd, spec, note = _knutson_datum(a.type, a.lattice)
    meta = {"type": a.type, "semisimple_type": spec}
    if note:
        meta["note"] = note
    if a.action == "inverse":
        if rd is None:
            return _doc("knutson inverse", meta, [], {"knutson_index": 1})
        M = parse_module_char(a.module, rd.rank)
        cut = parse_cutoff(a.cutoff, rd.rank)
        t = greedy_inverse(rd, M, cut)
        rows = [{"nu": list(n), "achieved": g, "target": w} for n, g, w in t.certificate]
        summary = {"leading": list(t.leading), "shift": list(t.shift),
                   "coefficients": [[list(k), v] for k, v in t.coefficients(rd)],
                   "passed": t.passed}
        meta.update({"module": a.module, "cutoff": list(cut)})
        return _doc("knutson inverse", meta, rows, summary)
    H = parse_group(a.group)
    meta.update({"group": a.group, "group_order": H.order, "coupling": a.coupling,
                 "weights": a.weights, "mode": a.mode})
    if rd is None:
        return _doc("knutson bound", meta, [], {"bound": 1, "connected_type": True})
    out = out_group(rd)
    phi = parse_coupling(a.coupling, H, out.group)
    if a.weights in ("fundamental", "all"):
        sample = sample_weights(rd, a.weights)
    else:
        sample = [parse_weight(json.dumps(w), rd.rank) for w in _json(a.weights)]
    kb = knutson_bound(rd, H, phi, sample, a.mode, out)
    d = kb.to_dict()
    rows = [{"weight": e["weight"], "orbit": e["orbit"], "stabilizer_order": e["stabilizer_order"],
             "degrees": e["degrees"], "lcm": e["lcm"]} for e in d["entries"]]
    summary = {"bound": kb.bound, "divides_group_order": d["divides_group_order"],
               "connected_type": kb.connected_type,
               "coupling_image_order": len(set(phi.images)),
               "coupling_image": describe_group(out.group.subgroup(phi.image_set())[0])}
    return _doc("knutson bound", meta, rows, summary)


def _json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON ({exc.msg})", text, exc.pos) from None


def _cmd_selftest(a, cfg):
    from .selftest import run_all

    results = run_all(jobs=cfg.jobs)
    rows = [{"criterion": r.number, "title": r.title, "status": "PASS" if r.passed else "FAIL",
             "detail": r.detail, "seconds": r.seconds if a.timings else None} for r in results]
    if not a.timings:
        for r in rows:
            del r["seconds"]
    summary = {"passed": sum(r.passed for r in results), "failed": sum(not r.passed for r in results)}
    return _doc("selftest", {}, rows, summary)


# -- entry point ---------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="redclass", description=__doc__)
    p.add_argument("--version", action="version", version=f"redclass {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "md"], default=None,
                        help="default: md on a terminal, json when piped")
    common.add_argument("--out", help="write the document to this file")
    common.add_argument("--jobs", type=int, default=1, help="parallelism width (selftest)")
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("classify", parents=[common], help="classification table")
    c.add_argument("pos_type", nargs="?", metavar="TYPE")
    c.add_argument("pos_lattice", nargs="?", metavar="LATTICE")
    c.add_argument("pos_group", nargs="?", metavar="GROUP")
    c.add_argument("--type")
    c.add_argument("--lattice")
    c.add_argument("--group")
    c.add_argument("--char", type=int, default=0)

    o = sub.add_parser("oracle", parents=[common], help="brute-force extension census")
    o.add_argument("pos_kernel", nargs="?", metavar="KERNEL")
    o.add_argument("pos_group", nargs="?", metavar="GROUP")
    o.add_argument("--kernel")
    o.add_argument("--group")
    o.add_argument("--action", help="'trivial' or JSON generator matrices (one coupling)")
    o.add_argument("--compare", action="store_true",
                   help="transport couplings from a root datum and compare with classify")
    o.add_argument("--type", help="root datum for --compare (default inferred from the kernel)")
    o.add_argument("--lattice", default="sc")
    o.add_argument("--char", type=int, default=0)
    o.add_argument("--confirm", choices=["auto", "yes", "no"], default="auto",
                   help="raw marked-isomorphism confirmation (auto: small extensions only)")

    h = sub.add_parser("h2", parents=[common], help="second cohomology group")
    h.add_argument("--group", required=True)
    h.add_argument("--module", required=True)
    h.add_argument("--action", default="trivial")

    k = sub.add_parser("knutson", parents=[common], help="Knutson-index certificates")
    k.add_argument("action", choices=["inverse", "bound"])
    k.add_argument("--type", required=True)
    k.add_argument("--lattice", default="sc")
    k.add_argument("--module", default="[0]")
    k.add_argument("--cutoff", default="0")
    k.add_argument("--group", default="1")
    k.add_argument("--coupling", default="surjective")
    k.add_argument("--weights", default="fundamental")
    k.add_argument("--mode", choices=["split", "projective"], default="split")

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    s.add_argument("--timings", action="store_true", help="include wall times (not deterministic)")
    return p


_DISPATCH = {"classify": _cmd_classify, "oracle": _cmd_oracle, "h2": _cmd_h2,
             "knutson": _cmd_knutson, "selftest": _cmd_selftest}


def run(cfg):
    """Returns ``(exit status, document)``."""
    cfg.validate()
    doc = _DISPATCH[cfg.subcommand](cfg.args, cfg)
    status = 0
    if cfg.subcommand == "selftest" and doc["summary"]["failed"]:
        status = 5
    return status, doc


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or ("md" if sys.stdout.isatty() else "json")
    cfg = RunConfig(args.subcommand, args, fmt, args.out, args.jobs)
    try:
        status, doc = run(cfg)
    except RedclassError as exc:
        print(f"redclass: error: {exc}", file=sys.stderr)
        return exc.exit_code
    text = emit(doc, fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
