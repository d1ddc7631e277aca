"""Acceptance criteria at the default ranks (A_1..A_8, D_4..D_6).

Each test prints one ``criterion N: PASS|FAIL`` line, whatever the outcome,
and then asserts.  The selftest checks supply one route; each test adds the
independent assertions of its criterion on top.
"""
import time

import pytest

from clustertilt import selftest
from clustertilt.cli import main
from clustertilt.presentation import ct_quiver, is_disconnected, is_disjoint, shortest_paths

MAX_A, MAX_D = 8, 6


@pytest.fixture(scope="module")
def session():
    return selftest.Session(MAX_A, MAX_D)


@pytest.fixture
def report(capsys):
    def emit(number, checks, secs):
        failed = [msg for ok, msg in checks if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = "; ".join(failed) or "; ".join(msg for _, msg in checks)
        with capsys.disabled():
            print(f"\ncriterion {number}: {status} ({secs:.1f}s) {detail}")
        assert not failed, detail
    return emit


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def test_criterion_1_counts(session, report):
    (ok, detail), secs = timed(selftest.check_counts, session)
    checks = [(ok, detail)]
    for spec in session.specs():
        if (spec.family, spec.rank) in selftest.CT_COUNTS:
            got = len(session.cts(spec))
            want = selftest.CT_COUNTS[spec.family, spec.rank]
            checks.append((got == want, f"{spec}: {got} objects (table {want})"))
    checks.append((secs < 60, f"runtime {secs:.1f}s within 60s"))
    report(1, checks, secs)


def test_criterion_2_oracle_agreement(session, report):
    (ok, detail), secs = timed(selftest.check_oracles, session)
    report(2, [(ok, detail)], secs)


def test_criterion_3_relations(session, report, golden):
    t0 = time.perf_counter()
    checks = [selftest.check_relations(session)]
    arrows = bad = 0
    for spec in session.specs():
        C = session.category(spec)
        for T in session.cts(spec):
            Q = ct_quiver(C, T)
            for a in Q.arrows:
                arrows += 1
                paths = shortest_paths(Q, a)
                if len(paths) > 2 or (len(paths) == 2 and not (is_disjoint(*paths) and is_disconnected(Q, *paths))):
                    bad += 1
    checks.append((bad == 0, f"{arrows} arrows with at most 2 disjoint, disconnected return paths"))
    goldens = [("three_cycle.txt", "A", 3, "(0,1) (0,3) (2,1)"),
               ("shape_one_d4.txt", "D", 4, "(0,3) (0,4) (1,1) (3,1)"),
               ("oriented_four_cycle.txt", "D", 4, "(0,3) (1,1) (2,3) (3,1)")]
    for name, fam, rank, obj in goldens:
        lines = []
        code = main(["quiver", "--family", fam, "--rank", str(rank), "--object", obj, "--relations"], out=lines.append)
        checks.append((code == 0 and "\n".join(lines) + "\n" == golden(name), f"golden {name}"))
    report(3, checks, time.perf_counter() - t0)


def test_criterion_4_lemma_suite(session, report):
    (ok, detail), secs = timed(selftest.check_lemmas, session)
    report(4, [(ok, detail)], secs)


def test_criterion_5_round_trip(session, report):
    (ok, detail), secs = timed(selftest.check_roundtrip, session)
    report(5, [(ok, detail), (secs < 300, f"runtime {secs:.1f}s within 300s")], secs)


def test_criterion_6_robustness(session, report):
    (ok, detail), secs = timed(selftest.check_robustness, session)
    names = {name for name, _, _ in selftest.rejection_corpus()}
    needed = {"2-cycle", "non-oriented 4-cycle", "degree-5 vertex", "3-neighbour vertex on two 3-cycles"}
    checks = [(ok, detail),
              (len(names) >= 10, f"{len(names)} curated quivers"),
              (needed <= names, "corpus covers 2-cycles, non-oriented 4-cycles, degree 5, 3-neighbour cycles")]
    report(6, checks, secs)
