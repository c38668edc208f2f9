"""Pure request -> report functions shared by the HTTP routes and the CLI."""
from __future__ import annotations

import time

from ..circuit import build_circuit, classify, play_game, render_circuit, run
from ..patterns import PatternVector, basis, imbalance_ratio, member_at
from ..simulator import sample
from ..verify import run_suite
from .models import (
    BasisEntry,
    BasisReport,
    BasisRequest,
    ClassifyEntry,
    ClassifyReport,
    ClassifyRequest,
    ExportEntry,
    ExportReport,
    ExportRequest,
    GameEntry,
    GameReport,
    GameRequest,
    SampleEntry,
    SampleReport,
    SampleRequest,
    VerifyEntry,
    VerifyReport,
    VerifyRequest,
)


def _elapsed_ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def handle_basis(req: BasisRequest) -> BasisReport:
    t0 = time.perf_counter()
    b = basis(req.rank)
    entries = [
        BasisEntry(index=i, pattern=str(m), ratio=str(imbalance_ratio(m)))
        for i, m in enumerate(b.members)
    ]
    return BasisReport(
        command="basis", rank=req.rank, results=entries, passed=True, timing_ms=_elapsed_ms(t0)
    )


def _resolve_pattern(req: ClassifyRequest) -> PatternVector:
    by_pattern = req.pattern is not None
    by_index = req.rank is not None or req.index is not None
    if by_pattern and not by_index:
        return PatternVector.parse(req.pattern)
    if not by_pattern and req.rank is not None and req.index is not None:
        return member_at(req.rank, req.index)
    raise ValueError("provide either a pattern or both rank and index")


def handle_classify(req: ClassifyRequest) -> ClassifyReport:
    t0 = time.perf_counter()
    p = _resolve_pattern(req)
    r = classify(p, faithful=req.faithful, keep_state=req.include_state)
    entry = ClassifyEntry(
        pattern=str(p),
        index=r.index,
        bits=str(r.bits),
        probability=r.probability,
        queries_used=r.queries_used,
        out_of_promise=r.out_of_promise,
        negation_of_member=r.negation_of_member,
        state=[float(a) for a in r.final_state.amps] if req.include_state else None,
    )
    return ClassifyReport(
        command="classify", rank=p.rank, results=[entry], passed=True, timing_ms=_elapsed_ms(t0)
    )


def handle_verify(req: VerifyRequest) -> VerifyReport:
    t0 = time.perf_counter()
    checks = run_suite(req.rank_max)
    entries = [
        VerifyEntry(rank=c.rank, check=c.check, passed=c.passed, total=c.total, ok=c.ok)
        for c in checks
    ]
    return VerifyReport(
        command="verify",
        rank=req.rank_max,
        results=entries,
        passed=all(c.ok for c in checks),
        timing_ms=_elapsed_ms(t0),
    )


def handle_sample(req: SampleRequest) -> SampleReport:
    t0 = time.perf_counter()
    p = PatternVector.parse(req.pattern)
    result = run(build_circuit(p.rank, p), keep_state=True)
    hist = sample(result.final_state, req.shots, req.seed)
    entries = [SampleEntry(outcome=o, count=c) for o, c in sorted(hist.counts.items())]
    return SampleReport(
        command="sample", rank=p.rank, results=entries, passed=True, timing_ms=_elapsed_ms(t0)
    )


def handle_export(req: ExportRequest) -> ExportReport:
    t0 = time.perf_counter()
    p = PatternVector.parse(req.pattern)
    text = render_circuit(build_circuit(p.rank, p))
    return ExportReport(
        command="export",
        rank=p.rank,
        results=[ExportEntry(circuit=text)],
        passed=True,
        timing_ms=_elapsed_ms(t0),
    )


def handle_game(req: GameRequest) -> GameReport:
    t0 = time.perf_counter()
    t = play_game(req.rank, req.seed, req.allow_negation)
    entry = GameEntry(
        seed=t.seed,
        bob_index=t.bob_index,
        bob_negated=t.bob_negated,
        alice_index=t.alice_index,
        alice_claims_negation=t.alice_claims_negation,
        disambiguation_used=t.disambiguation_used,
        queries_used=t.queries_used,
        winner=t.winner,
    )
    return GameReport(
        command="game",
        rank=req.rank,
        results=[entry],
        passed=t.winner == "alice",
        timing_ms=_elapsed_ms(t0),
    )
