"""Command-line front end: ``sisotopy <verb> FILE... [options]``.

Exit status is 0 whenever a verdict was computed (including negative ones),
1 on unreadable or malformed input and 2 when a search bound refuses the job.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import NotApplicableError, SearchBoundError, SisotopyError, SPairError, TableError
from .holomorph import build_holomorph
from .morphisms import (
    AUTOMORPHISM_BOUND,
    AUTOTOPISM_BOUND,
    ISOMORPHISM_BOUND,
    SSYM_BOUND,
    apply_isotopism,
    autotopism_set,
    automorphism_group,
    find_isomorphism,
    parse_isotopism,
    saum,
    ssym,
    verify_isotopism,
)
from .perm import Perm
from .report import emit_report
from .substructure import SPair, enumerate_substructures, is_smarandache, make_spair
from .tables import CayleyTable, classify, format_table, parse_table_document
from .theorems import verify_theorem_31, verify_theorem_32
from .varieties import holds_identity, resolve_varieties, smarandache_variety_check, variety_profile

VERBS = (
    "check", "sub", "aut", "saum", "ssym", "autotop", "isotope", "verify-iso",
    "iso", "holomorph", "variety", "verify-t31", "verify-t32",
)


class InputError(SisotopyError):
    pass


def _yn(b) -> str:
    return "yes" if b else "no"


def _set(xs) -> str:
    return "{" + ",".join(map(str, xs)) + "}"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"{path}: file not found") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_table(path: str) -> tuple[CayleyTable, tuple[int, ...] | None]:
    try:
        return parse_table_document(_read(path))
    except TableError as exc:
        raise InputError(f"{path}: {exc}") from None


def _parse_subset(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(sorted({int(t) for t in text.replace(" ", "").strip("{}").split(",") if t}))
    except ValueError:
        raise InputError(f"subset must be a comma-separated list of integers, got {text!r}") from None


def _spair(table: CayleyTable, given, doc_subset, label: str) -> tuple[SPair, bool]:
    """Resolve the designated subset; returns the pair and whether it was chosen automatically."""
    subset = given if given is not None else doc_subset
    if subset is not None:
        return make_spair(table, subset), False
    ok, witness = is_smarandache(table)
    if not ok:
        raise InputError(f"{label}: no S-substructure exists, so no subset can be designated")
    return make_spair(table, witness), True


def _load_triple(path: str):
    try:
        return parse_isotopism(_read(path))
    except TableError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_witness(path: str) -> dict[str, Perm]:
    """``beta= ..``, ``gamma= ..``, ``delta= ..`` lines, or a JSON object with those keys."""
    src = _read(path)
    out = {}
    try:
        if src.lstrip().startswith("{"):
            doc = json.loads(src)
            for k in ("beta", "gamma", "delta"):
                if k in doc:
                    out[k] = Perm(tuple(doc[k]))
        else:
            for line in src.splitlines():
                if not line.strip() or line.lstrip().startswith("#"):
                    continue
                key, sep, rest = line.partition("=")
                key = key.strip()
                if not sep or key not in ("beta", "gamma", "delta"):
                    raise InputError(f"{path}: expected 'beta=', 'gamma=' or 'delta=' line, got {line!r}")
                out[key] = Perm.parse(rest)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None
    missing = [k for k in ("beta", "gamma", "delta") if k not in out]
    if missing:
        raise InputError(f"{path}: missing {', '.join(missing)}")
    return out


def _bound(args, default: int) -> int:
    return args.max_order if args.max_order is not None else default


def _group_text(title: str, group) -> str:
    lines = [f"{title}: order {group.order}"] + [p.format() for p in group]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- verbs


def cmd_check(args):
    table, doc_sub = _load_table(args.files[0])
    cls = classify(table)
    given = args.s if args.s is not None else doc_sub
    if given is not None:
        pair = make_spair(table, given)
        smarandache, witness = True, pair.subset
    else:
        smarandache, witness = is_smarandache(table)
    doc = {
        "order": table.order,
        "quasigroup": cls.is_quasigroup,
        "loop": cls.is_loop,
        "semigroup": cls.is_semigroup,
        "group": cls.is_group,
        "identity": cls.identity,
        "smarandache": smarandache,
        "witness": list(witness) if witness else None,
    }
    text = (
        f"quasigroup: {_yn(cls.is_quasigroup)}, loop: {_yn(cls.is_loop)}, "
        f"smarandache: {_yn(smarandache)}"
        + (f", witness {_set(witness)}" if witness else "")
        + "\n"
        + f"semigroup: {_yn(cls.is_semigroup)}, group: {_yn(cls.is_group)}, "
        + f"identity: {'none' if cls.identity is None else cls.identity}\n"
    )
    return doc, text


def cmd_sub(args):
    table, _ = _load_table(args.files[0])
    subs = enumerate_substructures(table, args.want)
    doc = {"want": args.want, "substructures": [{"elements": list(s.elements), "kind": s.kind.kind()} for s in subs]}
    text = f"{args.want} substructures: {len(subs)}\n" + "".join(
        f"{_set(s.elements)} {s.kind.kind()}\n" for s in subs
    )
    return doc, text


def cmd_aut(args):
    table, _ = _load_table(args.files[0])
    g = automorphism_group(table, _bound(args, AUTOMORPHISM_BOUND))
    return {"order": g.order, "elements": g}, _group_text("AUM", g)


def cmd_saum(args):
    table, doc_sub = _load_table(args.files[0])
    pair, _ = _spair(table, args.s, doc_sub, args.files[0])
    g = saum(pair, _bound(args, AUTOMORPHISM_BOUND))
    doc = {"order": g.order, "elements": g, "s_subset": list(pair.subset)}
    return doc, f"subset: {_set(pair.subset)}\n" + _group_text("SAUM", g)


def cmd_ssym(args):
    table, doc_sub = _load_table(args.files[0])
    pair, _ = _spair(table, args.s, doc_sub, args.files[0])
    g = ssym(pair, _bound(args, SSYM_BOUND))
    doc = {"order": g.order, "elements": g, "s_subset": list(pair.subset)}
    return doc, f"subset: {_set(pair.subset)}\n" + _group_text("SSYM", g)


def cmd_autotop(args):
    table, doc_sub = _load_table(args.files[0])
    given = args.s if args.s is not None else doc_sub
    pair = make_spair(table, given) if given is not None else None
    aut = autotopism_set(table, pair, _bound(args, AUTOTOPISM_BOUND))
    title = "SAUT" if pair else "AUT"
    doc = {"kind": title, "order": aut.order, "triples": aut}
    if pair:
        doc["s_subset"] = list(pair.subset)
    lines = [f"{title}: order {aut.order}"]
    if pair:
        lines.insert(0, f"subset: {_set(pair.subset)}")
    for t in aut:
        lines.append(f"U= {t.U} | V= {t.V} | W= {t.W}")
    return doc, "\n".join(lines) + "\n"


def _need_triple(args):
    if not args.triple:
        raise InputError(f"{args.verb} needs --triple FILE")
    return _load_triple(args.triple)


def _same_degree(iso, table, what):
    if iso.degree != table.order:
        raise InputError(f"triple has degree {iso.degree} but {what} has order {table.order}")


def cmd_isotope(args):
    table, doc_sub = _load_table(args.files[0])
    iso = _need_triple(args)
    _same_degree(iso, table, "the table")
    out = apply_isotopism(table, iso)
    given = args.s if args.s is not None else doc_sub
    doc = {"n": out.order, "table": out}
    if given is not None:
        doc["s_subset"] = sorted(iso.W.image_of(given))
    return doc, out


def cmd_verify_iso(args):
    src, src_doc = _load_table(args.files[0])
    dst, dst_doc = _load_table(args.files[1])
    iso = _need_triple(args)
    _same_degree(iso, src, "the source")
    _same_degree(iso, dst, "the target")
    s_src = args.s if args.s is not None else src_doc
    s_dst = args.s_dst if args.s_dst is not None else dst_doc
    plain = verify_isotopism(src, dst, iso)
    lines = [f"isotopism: {_yn(plain.is_isotopism)}"]
    doc = plain.to_json()
    if s_src is not None or s_dst is not None or is_smarandache(src)[0]:
        pair_src, _ = _spair(src, s_src, None, args.files[0])
        derived = s_dst is None
        if derived:
            # the only candidate that can work is the W-image of the source subset
            s_dst = tuple(sorted(iso.W.image_of(pair_src.subset)))
        try:
            pair_dst = make_spair(dst, s_dst)
        except SPairError as exc:
            if not derived:
                raise
            doc["s_isotopism"] = False
            doc["s_subset"] = list(pair_src.subset)
            doc["s_subset_dst"] = list(s_dst)
            lines.append(f"S-isotopism: no ({exc} in the target)")
        else:
            verdict = verify_isotopism(pair_src, pair_dst, iso)
            doc = verdict.to_json()
            doc["s_subset"] = list(pair_src.subset)
            doc["s_subset_dst"] = list(pair_dst.subset)
            lines.append(f"S-isotopism: {_yn(verdict.is_s_isotopism)}")
            if args.s is None or args.s_dst is None:
                lines.append(f"subsets: {_set(pair_src.subset)} -> {_set(pair_dst.subset)}")
            if verdict.failing_components:
                lines.append("failing components: " + ",".join(verdict.failing_components))
    if plain.failing_cells:
        x, y = plain.failing_cells[0]
        lines.append(f"first failing cell: ({x},{y}) of {len(plain.failing_cells)}")
    return doc, "\n".join(lines) + "\n"


def cmd_iso(args):
    src, src_doc = _load_table(args.files[0])
    dst, dst_doc = _load_table(args.files[1])
    s_src = args.s if args.s is not None else src_doc
    s_dst = args.s_dst if args.s_dst is not None else dst_doc
    bound = _bound(args, ISOMORPHISM_BOUND)
    if (s_src is None) != (s_dst is None):
        raise InputError("S-isomorphism needs both --s and --s-dst")
    if s_src is not None:
        phi = find_isomorphism(make_spair(src, s_src), make_spair(dst, s_dst), bound)
        label = "S-isomorphic"
    else:
        phi = find_isomorphism(src, dst, bound)
        label = "isomorphic"
    doc = {"isomorphic": phi is not None, "phi": phi, "smarandache": s_src is not None}
    text = f"{label}: {_yn(phi is not None)}\n"
    if phi is not None:
        text += f"phi= {phi}\n"
    return doc, text


def cmd_holomorph(args):
    table, doc_sub = _load_table(args.files[0])
    bound = _bound(args, AUTOMORPHISM_BOUND)
    if args.mode == "smarandache":
        pair, _ = _spair(table, args.s, doc_sub, args.files[0])
        h = build_holomorph(table, "smarandache", pair, bound)
    else:
        h = build_holomorph(table, "full", None, bound)
    text = f"holomorph ({h.mode}): order {h.order}, group order {h.group.order}\n"
    if h.designated is not None:
        text += f"designated: {_set(h.designated)}\n"
    text += "encoding: " + " ".join(f"{h.encode(a, x)}=({a},{x})" for a, x in h.encoding()) + "\n"
    return h.to_json(), text + format_table(h.table)


def cmd_variety(args):
    table, doc_sub = _load_table(args.files[0])
    varieties = resolve_varieties(args.variety)
    profile = variety_profile(table, varieties)
    doc = {"profile": profile, "counterexamples": {}}
    lines = []
    for v in varieties:
        verdict = profile[v.name]
        line = f"{v.name}: {verdict}"
        if verdict == "fails":
            _, cex = holds_identity(table, v)
            doc["counterexamples"][v.name] = cex
            line += " " + ",".join(f"{k}={cex[k]}" for k in sorted(cex))
        lines.append(line)
    given = args.s if args.s is not None else doc_sub
    if given is not None:
        pair = make_spair(table, given)
        s_rows = {}
        lines.append(f"S-substructure {_set(pair.subset)}:")
        for v in varieties:
            try:
                ok, cex = smarandache_variety_check(pair, v)
            except NotApplicableError:
                s_rows[v.name] = "not_applicable"
            else:
                s_rows[v.name] = "holds" if ok else "fails"
            lines.append(f"  {v.name}: {s_rows[v.name]}")
        doc["s_profile"] = s_rows
        doc["s_subset"] = list(pair.subset)
    return doc, "\n".join(lines) + "\n"


def _theorem_text(report) -> str:
    doc = report.to_json()
    out = [f"statement: {report.statement}", f"hypothesis satisfied: {_yn(report.hypothesis_ok)}"]
    for key in ("hypothesis", "witnesses", "conclusion", "discrepancies", "notes", "observations"):
        out.append(f"{key}: {json.dumps(doc[key], sort_keys=True, separators=(',', ':'))}")
    return "\n".join(out) + "\n"


def cmd_verify_t31(args):
    u_table, u_doc = _load_table(args.files[0])
    v_table, v_doc = _load_table(args.files[1])
    u, _ = _spair(u_table, args.s, u_doc, args.files[0])
    v, _ = _spair(v_table, args.s_dst, v_doc, args.files[1])
    report = verify_theorem_31(u, v)
    doc = report.to_json()
    doc["subsets"] = {"U": list(u.subset), "V": list(v.subset)}
    text = f"subsets: U {_set(u.subset)}, V {_set(v.subset)}\n" + _theorem_text(report)
    return doc, text


def cmd_verify_t32(args):
    u_table, u_doc = _load_table(args.files[0])
    u, _ = _spair(u_table, args.s, u_doc, args.files[0])
    if args.witness:
        w = _load_witness(args.witness)
    else:
        ident = Perm.identity(u.order)
        w = {"beta": ident, "gamma": ident, "delta": ident}
    report = verify_theorem_32(u, w["beta"], w["gamma"], w["delta"], resolve_varieties(args.variety))
    doc = report.to_json()
    doc["subsets"] = {"U": list(u.subset)}
    text = f"subset: U {_set(u.subset)}\n" + _theorem_text(report)
    return doc, text


HANDLERS = {
    "check": (cmd_check, 1),
    "sub": (cmd_sub, 1),
    "aut": (cmd_aut, 1),
    "saum": (cmd_saum, 1),
    "ssym": (cmd_ssym, 1),
    "autotop": (cmd_autotop, 1),
    "isotope": (cmd_isotope, 1),
    "verify-iso": (cmd_verify_iso, 2),
    "iso": (cmd_iso, 2),
    "holomorph": (cmd_holomorph, 1),
    "variety": (cmd_variety, 1),
    "verify-t31": (cmd_verify_t31, 2),
    "verify-t32": (cmd_verify_t32, 1),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sisotopy",
        description="Isotopy workbench for finite quasigroups, loops and their Smarandache substructures.",
    )
    p.add_argument("verb", choices=VERBS, help="operation to run")
    p.add_argument("files", nargs="+", help="table file(s): text 'n' + rows, or JSON {n, table[, s_subset]}")
    p.add_argument("--json", action="store_true", help="emit canonical JSON instead of text")
    p.add_argument("--triple", help="isotopism file (U=/V=/W= lines or JSON)")
    p.add_argument("--s", type=_parse_subset, help="designated subset of the (first) table, e.g. 0,1")
    p.add_argument("--s-dst", type=_parse_subset, help="designated subset of the second table")
    p.add_argument("--variety", default="all", help="catalog names, comma separated, an identity, or 'all'")
    p.add_argument("--mode", choices=("full", "smarandache"), default="full", help="holomorph group")
    p.add_argument("--max-order", type=int, help="override the search bound of the verb")
    p.add_argument("--want", choices=("closed", "semigroup", "quasigroup", "loop", "group"),
                   default="closed", help="substructure filter for 'sub'")
    p.add_argument("--witness", help="verify-t32: file with beta=, gamma=, delta= lines")
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    handler, arity = HANDLERS[args.verb]
    if len(args.files) != arity:
        stderr.write(f"sisotopy {args.verb}: expected {arity} file(s), got {len(args.files)}\n")
        return 1
    try:
        doc, text = handler(args)
    except SearchBoundError as exc:
        stderr.write(f"sisotopy {args.verb}: {exc}\n")
        return 2
    except (SisotopyError, ValueError) as exc:
        stderr.write(f"sisotopy {args.verb}: {exc}\n")
        return 1
    stdout.write(emit_report(doc, "json") if args.json else emit_report(text, "text"))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
