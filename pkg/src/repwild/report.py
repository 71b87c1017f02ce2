"""Wildness verdicts from complexity, self-injectivity and finite generation."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import block_decomposition, is_self_injective
from .growth import complexity, cx_consistency
from .modrep import block_component, block_of_module
from .zoo import fg_certificate

SILENT_NOTE = ("maincor: a tame block would force cx <= 2 for all its modules, so this value is "
               "consistent with tameness but does not prove it")


@dataclass
class WildnessVerdict:
    algebra: str
    module: str
    block: object
    cx: object  # GrowthReport
    self_injective: object  # SelfInjectivity
    fg: object  # FgCertificate
    verdict: str  # wild | criterion-silent | not-applicable
    rule: str
    confidence: str  # exact | estimated | undetermined
    failed: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    consistency: object = None

    def to_json(self):
        out = {
            "algebra": self.algebra,
            "module": self.module,
            "block": self.block,
            "cx": {"gamma": self.cx.gamma, "mode": self.cx.mode, "stable": self.cx.stable,
                   "dims": list(self.cx.sequence)},
            "self_injective": self.self_injective.to_json(),
            "fg": self.fg.to_json(),
            "verdict": self.verdict,
            "rule": self.rule,
            "confidence": self.confidence,
            "failed": list(self.failed),
            "notes": list(self.notes),
        }
        if self.consistency is not None:
            c = self.consistency
            out["consistency"] = {"values": c.values(), "agree": c.agree, "warnings": c.warnings}
        return out

    def __str__(self):
        g = "?" if self.cx.gamma is None else self.cx.gamma
        s = f"{self.algebra} / {self.module}: {self.verdict} (cx {g}, {self.confidence}; {self.rule})"
        if self.failed:
            s += " failed: " + ", ".join(self.failed)
        return s


def _decide(selfinj, fg, cx):
    """The decision table; returns (verdict, rule, confidence, failed, notes)."""
    failed = []
    if not selfinj:
        failed.append("self-injective")
    if fg.status not in ("certified", "asserted"):
        failed.append("fg")
    conf = cx.mode
    if failed:
        return "not-applicable", "mainthm preconditions", conf, failed, []
    if cx.gamma is None:
        return "criterion-silent", "mainthm", conf, [], ["growth rate undetermined within the window"]
    if cx.gamma >= 3:
        notes = [] if cx.mode == "exact" else ["gamma estimated from the window, not certified"]
        if cx.mode == "estimated" and not cx.stable:
            notes.append("estimate changes when the window shrinks by two")
        return "wild", "mainthm: cx >= 3 in a self-injective block under fg", conf, [], notes
    return "criterion-silent", "maincor", conf, [], [SILENT_NOTE]


def wildness_report(A, M, window=16, fg_override=False, budget=None, consistency=True):
    """Apply the cx >= 3 wildness criterion to the block containing M."""
    selfinj = is_self_injective(A)
    fg = fg_certificate(A, asserted=fg_override)
    blocks = block_decomposition(A)
    where = block_of_module(M, blocks)
    notes = []
    if isinstance(where, tuple):
        # M straddles several blocks; each summand e_i M is judged on its own and the
        # summand of largest complexity carries the verdict
        best = None
        for i in where[1]:
            part = block_component(M, blocks.idempotents[i], f"e{i}{M.name}")
            rep = complexity(A, part, window, budget)
            key = -1 if rep.gamma is None else rep.gamma
            if best is None or key > best[0]:
                best = (key, i, part, rep)
        _, block, M, cx = best
        notes.append(f"module spans blocks {where[1]}; reporting the summand in block {block}")
    else:
        block = where
        cx = complexity(A, M, window, budget)
    verdict, rule, conf, failed, more = _decide(selfinj, fg, cx)
    cons = None
    if consistency and selfinj:
        cons = cx_consistency(A, M, window, budget, res=cx.resolution)
        if not cons.agree:
            notes.append(f"cx consistency chain disagrees: {cons.values()}")
    return WildnessVerdict(A.name, M.name, block, cx, selfinj, fg, verdict, rule, conf, failed,
                           notes + more, cons)


# -- batches -----------------------------------------------------------------------------

def _resolve_algebra(entry, base):
    from . import io
    from .cli import build_zoo

    src = entry.get("algebra")
    if isinstance(src, dict) and "family" in src and "schema" not in src:
        params = dict(src)
        return build_zoo(params.pop("family"), params)
    if isinstance(src, str):
        src = Path(base, src)
    return io.load_algebra(src)


def _resolve_module(entry, A, base):
    from . import io
    from .modrep import trivial_module

    src = entry.get("module", "trivial")
    if src == "trivial":
        return trivial_module(A)
    if isinstance(src, str):
        src = Path(base, src)
    return io.load_module(src, A)


def run_entry(entry, base="."):
    """One batch entry; errors are returned, never raised."""
    try:
        A = _resolve_algebra(entry, base)
        M = _resolve_module(entry, A, base)
        v = wildness_report(A, M, int(entry.get("window", 16)), bool(entry.get("fg_override", False)),
                            consistency=bool(entry.get("consistency", False)))
        return {"ok": True, "verdict": v.to_json(), "text": str(v)}
    except Exception as exc:  # isolate the entry
        return {"ok": False, "error": f"{type(exc).__name__}: {exc}"}


def batch_report(entries, base=".", workers=None):
    """Run every entry independently; results keep the input order."""
    entries = list(entries)
    workers = workers if workers is not None else int(os.environ.get("REPWILD_WORKERS", "1"))
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run_entry, entries, [base] * len(entries)))
    else:
        results = [run_entry(e, base) for e in entries]
    for i, r in enumerate(results):
        r["index"] = i
    return results
