"""Stable report dictionaries and human-readable rendering.

Machine output is JSON with a fixed key order and exact rational entries
serialized as strings, so identical inputs produce byte-identical reports.
"""

from __future__ import annotations

from .bijection import BijectionReport, CandidateSets
from .reps import Morphism, Representation
from .tau import PairReport, SupportPair

SCHEMA_VERSION = 1


def matrix_dict(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.tolist()]


def representation_dict(rep: Representation) -> dict:
    return {
        "dims": list(rep.dims),
        "maps": {a.name: matrix_dict(rep.map(a.name)) for a in rep.alg.quiver.arrows},
    }


def morphism_dict(phi: Morphism) -> dict:
    return {
        "source_dims": list(phi.source.dims),
        "target_dims": list(phi.target.dims),
        "blocks": [matrix_dict(b) for b in phi.blocks],
    }


def _summand_names(pair: SupportPair) -> list[str]:
    if pair.summand_names:
        return list(pair.summand_names)
    return [f"T{k + 1}" for k in range(len(pair.t_summands))] + \
           [f"P{k + 1}" for k in range(len(pair.p_summands))]


def pair_block(pair: SupportPair) -> dict:
    names = _summand_names(pair)
    return {
        "name": pair.name,
        "status": pair.report.status if pair.report else "unverified",
        "T": [{"name": names[k], "dims": list(s.dims)}
              for k, s in enumerate(pair.t_summands)],
        "P": [{"name": names[pair.r + k], "dims": list(s.dims)}
              for k, s in enumerate(pair.p_summands)],
    }


def pair_report_dict(pair: SupportPair, report: PairReport) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "command": "check-pair",
        "pair": pair.name,
        "status": report.status,
        "n": report.n,
        "summands": pair_block(pair),
        "checks": [{"name": name, "result": result, "detail": detail}
                   for name, result, detail in report.checks],
    }
    if report.witness is not None:
        out["witness"] = morphism_dict(report.witness)
    return out


def edges_list(cands: CandidateSets) -> list[dict]:
    out = []
    for i in range(1, cands.n + 1):
        for j in range(1, cands.n + 1):
            label = cands.labels[(i, j)]
            entry = {"left": i, "right": j, "conditions": label.letters()}
            if label.witnesses:
                entry["witnesses"] = {
                    letter: morphism_dict(w) for letter, w in sorted(label.witnesses.items())
                }
            out.append(entry)
    return out


def cycles(perm: list[int]) -> str:
    """Cycle notation of a permutation given as a 1-based image list."""
    seen = set()
    parts = []
    for start in range(1, len(perm) + 1):
        if start in seen or perm[start - 1] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start - 1]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt - 1]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts) if parts else "id"


def bijection_report_dict(report: BijectionReport) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "command": "bijection",
        "left": pair_block(report.left),
        "right": pair_block(report.right),
        "n": report.candidates.n,
        "candidates": [sorted(s) for s in report.candidates.sets],
        "edges": edges_list(report.candidates),
        "hall": {"ok": report.hall.ok} if report.hall.ok
        else {"ok": False, "deficient": report.hall.deficient},
        "matching": list(report.matching),
        "matching_cycles": cycles(report.matching),
        "matched_conditions": list(report.matched_conditions),
    }
    if report.enumeration is not None:
        out["all_matchings"] = {
            "perms": [list(p) for p in report.enumeration.perms],
            "cycles": [cycles(p) for p in report.enumeration.perms],
            "truncated": report.enumeration.truncated,
        }
    if report.restricted is not None:
        drop, sets = report.restricted
        out["restricted"] = {"drop": list(drop), "sets": [sorted(s) for s in sets]}
    return out


# ---------------------------------------------------------------------------
# human-readable rendering


def _render_matrix(m) -> list[str]:
    if m.shape[0] == 0 or m.shape[1] == 0:
        return [f"  (empty {m.shape[0]}x{m.shape[1]})"]
    rows = matrix_dict(m)
    width = max(len(x) for row in rows for x in row)
    return ["  [" + "  ".join(x.rjust(width) for x in row) + "]" for row in rows]


def render_representation(rep: Representation) -> str:
    lines = [f"dimension vector: {tuple(rep.dims)}"]
    for a in rep.alg.quiver.arrows:
        lines.append(f"map {a.name} ({a.source} -> {a.target}):")
        lines.extend(_render_matrix(rep.map(a.name)))
    return "\n".join(lines)


def render_pair_report(pair: SupportPair, report: PairReport) -> str:
    lines = [f"pair {pair.name or '(unnamed)'}: {report.status}"]
    for name, result, detail in report.checks:
        suffix = f"  ({detail})" if detail else ""
        lines.append(f"  {name:<18} {result}{suffix}")
    return "\n".join(lines)


def render_bijection_report(report: BijectionReport) -> str:
    names_l = _summand_names(report.left)
    names_r = _summand_names(report.right)
    lines = [
        f"left pair  {report.left.name or '(unnamed)'}: T = "
        + (" + ".join(names_l[:report.left.r]) or "0") + " | P = "
        + (" + ".join(names_l[report.left.r:]) or "0"),
        f"right pair {report.right.name or '(unnamed)'}: T = "
        + (" + ".join(names_r[:report.right.r]) or "0") + " | P = "
        + (" + ".join(names_r[report.right.r:]) or "0"),
        "",
        "candidate sets:",
    ]
    for i, s in enumerate(report.candidates.sets, start=1):
        lines.append(f"  {i}: {{{', '.join(map(str, sorted(s)))}}}")
    lines.append("")
    lines.append("edge conditions (left, right -> conditions):")
    for i in range(1, report.candidates.n + 1):
        row = []
        for j in range(1, report.candidates.n + 1):
            letters = report.candidates.labels[(i, j)].letters()
            row.append("".join(letters) if letters else "-")
        lines.append(f"  {i}: " + "  ".join(f"{j}:{c}" for j, c in enumerate(row, start=1)))
    lines.append("")
    lines.append(f"matching: {cycles(report.matching)}  "
                 f"(images {', '.join(map(str, report.matching))})")
    lines.append("matched conditions: "
                 + ", ".join(f"{i}->{j} via ({c})" for i, (j, c) in
                             enumerate(zip(report.matching, report.matched_conditions),
                                       start=1)))
    if report.enumeration is not None:
        perms = ", ".join(cycles(p) for p in report.enumeration.perms)
        extra = " (truncated)" if report.enumeration.truncated else ""
        lines.append(f"all matchings: {perms}{extra}")
    if report.restricted is not None:
        drop, sets = report.restricted
        lines.append(f"restricted sets without ({', '.join(drop)}):")
        for i, s in enumerate(sets, start=1):
            lines.append(f"  {i}: {{{', '.join(map(str, sorted(s)))}}}")
    return "\n".join(lines)
