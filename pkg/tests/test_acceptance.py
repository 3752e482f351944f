"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpora import identity_tuples, primary_primes  # noqa: E402
from cubicforms.arith import primes_between  # noqa: E402
from cubicforms.cli import main as cli_main  # noqa: E402
from cubicforms.criteria import LABELS, cubic_data_raw, evaluate_statements  # noqa: E402
from cubicforms.cubic_symbol import SymbolValue, cubic_jacobi, residue_character_oracle  # noqa: E402
from cubicforms.character import chi, subgroup_G, witness_index3  # noqa: E402
from cubicforms.eisenstein import EisensteinInt  # noqa: E402
from cubicforms.quadform import QuadForm, compose, enumerate_class_group, represents  # noqa: E402
from cubicforms.sequences import RecurrenceSpec, lucas_exact  # noqa: E402

_capture = None


@pytest.fixture(autouse=True)
def _expose_capture(pytestconfig):
    global _capture
    _capture = pytestconfig.pluginmanager.getplugin("capturemanager")
    yield
    _capture = None


@contextmanager
def _uncaptured():
    if _capture is None:
        yield
    else:
        with _capture.global_and_fixture_disabled():
            yield


def verdict(n, ok, detail, elapsed=None, limit=None):
    """Print the criterion line, then fail the test if it did not pass."""
    timing = ""
    if elapsed is not None:
        timing = f" [{elapsed:.1f}s" + (f" / limit {limit}s]" if limit else "]")
        if limit is not None and elapsed > limit:
            ok, detail = False, f"{detail}; too slow"
    with _uncaptured():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}{timing}")
    assert ok, detail


def cli_json(capsys, *argv):
    import json

    code = cli_main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_criterion_1_x3_minus_x_plus_2(capsys):
    t0 = time.perf_counter()
    code, doc = cli_json(capsys, "subgroup", "0", "-1", "2")
    ok = code == 0 and doc["results"] == ["[1,0,26]", "[2,0,13]"]
    ok &= doc["summary"]["class_number"] == 6 and doc["summary"]["discriminant"] == -104
    forms = (QuadForm(1, 0, 26), QuadForm(2, 0, 13))
    bad, checked = [], 0
    for p in primes_between(6, 5000):
        if p in (5, 7, 13) or (104 * 54 * 27) % p == 0:
            continue
        rep = evaluate_statements(0, -1, 2, p)
        three = rep.verdicts["i"]
        rep_by_forms = any(represents(f, p) is not None for f in forms)
        seq = [rep.verdicts[k] for k in ("iii", "iv", "v", "vi", "vii", "vii'", "viii")]
        if rep_by_forms != three or any(v != three for v in seq):
            bad.append(p)
        checked += 1
    ok &= not bad
    verdict(1, ok, f"G = {{[1,0,26],[2,0,13]}} in H(-104); {checked} primes, mismatches {bad}",
            time.perf_counter() - t0, 30)


def test_criterion_2_x3_plus_2x2_plus_x_plus_3(capsys):
    t0 = time.perf_counter()
    code, doc = cli_json(capsys, "subgroup", "2", "1", "3")
    ok = code == 0 and doc["results"] == ["[1,0,231]", "[3,0,77]", "[7,0,33]", "[11,0,21]"]
    ok &= doc["summary"]["class_number"] == 12
    code, scan = cli_json(capsys, "scan", "2", "1", "3", "--pmin", "5", "--pmax", "5000")
    s = scan["summary"]
    ok &= code == 0 and s["mismatches"] == 0
    ok &= set(s["excluded"]) == {7, 11}
    gated = {r["p"] for r in scan["results"] if "viii" in r["skipped"]}
    ok &= gated == {79, 3119}
    verdict(2, ok, f"G has 4 of 12 classes; {s['checked']} primes scanned, {s['mismatches']} mismatches",
            time.perf_counter() - t0, 60)


def test_criterion_3_surd_residues(capsys):
    t0 = time.perf_counter()
    expected = {
        (28, -29): ["[1,0,29]", "[2,2,15]"],
        (32, -38): ["[1,0,38]", "[2,0,19]"],
        (27, -26): ["[1,0,26]", "[2,0,13]"],
    }
    ok, parts = True, []
    for (P, D), members in expected.items():
        ok &= [str(K) for K in subgroup_G(P, D)] == members
        code, doc = cli_json(capsys, "cubres", str(P), str(D), "--pmax", "2000")
        s = doc["summary"]
        ok &= code == 0 and s["checked"] > 0 and s["agree"] == s["checked"]
        parts.append(f"({P},{D}) {s['agree']}/{s['checked']}")
    verdict(3, ok, "subgroups match; cubres agreement " + ", ".join(parts), time.perf_counter() - t0, 60)


def test_criterion_4_symbol_identity():
    t0 = time.perf_counter()
    E = EisensteinInt
    tuples = identity_tuples(500, seed=2024)
    bad = []
    for P, D, a, b, c, x, y in tuples:
        f = a * x * x + 2 * b * x * y + c * y * y
        lhs = cubic_jacobi(E(P * y + 3 * (a * x + b * y), 6 * (a * x + b * y)), f)
        rhs = cubic_jacobi(E(P - 3 * b, -6 * b), a)
        if lhs is not rhs:
            bad.append((P, D, a, b, c, x, y))
    verdict(4, not bad, f"{len(tuples)} tuples, {len(bad)} disagreements", time.perf_counter() - t0, 30)


def test_criterion_5_character():
    ok, parts = True, []
    for P, D in ((-27, -26), (28, -29), (32, -38), (-79, -231)):
        G = list(enumerate_class_group(D))
        ok &= chi(P, D, enumerate_class_group(D).identity()) is SymbolValue.ONE
        ok &= all(chi(P, D, compose(K, L)) is chi(P, D, K) * chi(P, D, L) for K in G for L in G)
        S = subgroup_G(P, D)
        w = witness_index3(P, D, 100)
        ok &= S.index == 3 and w is not None
        parts.append(f"D={D}: index {S.index}, witness {w}")
    verdict(5, ok, "; ".join(parts))


def test_criterion_6_equivalence_audit():
    t0 = time.perf_counter()
    cubics = primes = 0
    bad = []
    rng = range(-3, 4)
    for a1 in rng:
        for a2 in rng:
            for a3 in rng:
                P0, Q0, D0 = cubic_data_raw(a1, a2, a3)
                if D0 * Q0 == 0:
                    continue
                D1 = D0 // 4 if P0 % 2 == 0 else D0
                if D1 >= 0:
                    continue
                cubics += 1
                for p in primes_between(5, 500):
                    if (D0 * Q0) % p == 0:
                        continue
                    rep = evaluate_statements(a1, a2, a3, p)
                    primes += 1
                    if not rep.consistent:
                        bad.append((a1, a2, a3, p))
    verdict(6, not bad, f"{cubics} cubics, {primes} (cubic, prime) pairs over {len(LABELS)} statements, "
            f"{len(bad)} disagreements", time.perf_counter() - t0, 600)


def test_criterion_7_symbol_oracle():
    t0 = time.perf_counter()
    rng = random.Random(77)
    pis = primary_primes(10**4)
    bad = 0
    for pi in pis:
        for _ in range(200):
            alpha = EisensteinInt(rng.randrange(-10**9, 10**9), rng.randrange(-10**9, 10**9))
            bad += cubic_jacobi(alpha, pi) is not residue_character_oracle(alpha, pi)
    verdict(7, bad == 0, f"{len(pis)} primary primes x 200 numerators, {bad} disagreements",
            time.perf_counter() - t0)


def test_criterion_8_sequences():
    ok = all(lucas_exact(-54, 27, n)[0] == (-3) ** (n - 1) * lucas_exact(18, 3, n)[0] for n in range(1, 51))
    rng = random.Random(8)
    checked = 0
    ps = primes_between(5, 10**4)
    for _ in range(40):
        kind = rng.choice(("u", "s", "LucasU", "LucasV"))
        arity = 3 if kind in ("u", "s") else 2
        spec = RecurrenceSpec(kind, tuple(rng.randint(-100, 100) for _ in range(arity)), rng.choice(ps))
        for n in range(201):
            ok &= spec.term(n) == spec.exact(n) % spec.modulus
            checked += 1
    verdict(8, ok, f"Lucas scaling n <= 50; {checked} matrix-vs-naive terms")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
