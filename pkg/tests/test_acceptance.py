"""Acceptance criteria 1-9, each printed as one PASS/FAIL line.

Expected values are written out here from the closed-form tables rather
than taken from the package's own oracle module. Tolerance is exact
equality everywhere.
"""

import itertools
import json
import random
from fractions import Fraction as Q

from click.testing import CliRunner

from paralie.cli import main
from paralie.curvature import (
    curvature_form_check,
    curvature_invariants,
    curvature_symmetry_residuals,
    einstein_classify,
    kulkarni_nomizu,
    riemann,
    verify_r3_identity,
)
from paralie.errors import DegenerateDenominatorError
from paralie.exact import Tensor
from paralie.fundamental import (
    classify,
    fundamental_tensor_from_brackets,
    fundamental_tensor_from_connection,
    is_para_sasakian,
    levi_civita,
)
from paralie.lie_algebra import (
    CatalogEntry,
    StructureConstants,
    catalog_instantiate,
    jacobi_complete,
    jacobi_residual,
)
from paralie.special import (
    biinvariant_class_condition,
    is_biinvariant_phi,
    is_killing_metric,
    is_killing_xi,
    killing_metric_class_condition,
    killing_xi_class_condition,
)
from paralie.structure import STANDARD

GRID = [Q(-2), Q(-1), Q(-1, 2), Q(1, 2), Q(1), Q(2)]
TWO_PARAM = {"F1", "F11"}
FAMILIES = ["F1", "F4", "F5", "F8", "F9", "F10", "F11"]
G, EE = STANDARD.g, STANDARD.eta_eta
MIXED = StructureConstants.from_brackets({(0, 1): (0, 0, 1), (0, 2): (0, -1, 0), (1, 2): (1, 0, 0)})


def report(capsys, number, title, failures, cases):
    status = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print(f"\n[{status}] criterion {number}: {title} ({cases} cases, {len(failures)} failures)")
        for f in failures[:5]:
            print(f"    - {f}")
    assert not failures, failures[:5]


def family_entries(grid=GRID):
    for family in FAMILIES:
        if family in TWO_PARAM:
            for a, b in itertools.product(grid, repeat=2):
                yield CatalogEntry.of(family, alpha=a, beta=b)
        else:
            for a in grid:
                yield CatalogEntry.of(family, alpha=a)


def pipeline(s):
    conn = levi_civita(s)
    r = riemann(conn, s)
    return conn, r, curvature_invariants(r)


def random_jacobi(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        six = [Q(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)]
        try:
            out.append(jacobi_complete(*six))
        except DegenerateDenominatorError:
            continue
    return out


def example_expectations(a1, a2):
    mu, theta0 = -Q(a1), -2 * Q(a2)
    m = mu * mu + theta0 * theta0 / 4
    return m, {
        "R0101": m, "R0202": m, "R1212": -m,
        "rho00": -2 * m, "tau": -2 * m,
        "rho*12": -m, "rho*21": -m,
        "k01": -m, "k02": -m, "k12": m,
    }


def observed(r, d):
    return {
        "R0101": r[0, 1, 0, 1], "R0202": r[0, 2, 0, 2], "R1212": r[1, 2, 1, 2],
        "rho00": d.rho[0, 0], "tau": d.tau,
        "rho*12": d.rho_star[1, 2], "rho*21": d.rho_star[2, 1],
        "k01": d.k01, "k02": d.k02, "k12": d.k12,
    }


EXAMPLE_POINTS = [(0, 1), (2, 3), (1, 1), (-1, 2)]


def test_criterion_1_worked_example(capsys):
    failures, cases = [], 0
    for a1, a2 in EXAMPLE_POINTS:
        s = catalog_instantiate(CatalogEntry.of("Example", a1=a1, a2=a2))
        _, r, d = pipeline(s)
        _, expected = example_expectations(a1, a2)
        got = observed(r, d)
        for key, value in expected.items():
            cases += 1
            if got[key] != value:
                failures.append(f"({a1},{a2}) {key}: expected {value}, got {got[key]}")
        cases += 1
        if d.rho != EE * d.tau:
            failures.append(f"({a1},{a2}) rho - tau eta⊗eta nonzero")
        if (a1, a2) == (0, 1):
            cases += 2
            if not is_para_sasakian(classify(fundamental_tensor_from_brackets(s))):
                failures.append("(0,1) not para-Sasakian")
            if einstein_classify(d.rho, d.tau).kind != "l2-para-eta-Einstein":
                failures.append("(0,1) not l2-para-eta-Einstein")
    report(capsys, 1, "worked example curvature", failures, cases)


def class_relations(e, d):
    a = e.parameters["alpha"]
    half = Q(1, 2)
    return {
        "F1": a == half * d.theta1,
        "F4": a == half * d.theta0,
        "F5": a == half * d.theta_star0,
        "F8": a == d.lam,
        "F9": a == d.mu,
        "F10": a == half * d.nu,
        "F11": a == d.omega2 and e.parameters.get("beta") == d.omega1,
    }[e.family]


def test_criterion_2_class_theorem(capsys):
    failures, cases = [], 0
    for e in family_entries():
        cases += 1
        d = classify(fundamental_tensor_from_brackets(catalog_instantiate(e)))
        if d.membership != (e.family,):
            failures.append(f"{e.label()}: membership {d.label}")
        elif not class_relations(e, d):
            failures.append(f"{e.label()}: coefficient relation fails")
        elif not d.residual.is_zero():
            failures.append(f"{e.label()}: nonzero residual")
    report(capsys, 2, "class theorem round-trip", failures, cases)


def curvature_table(e):
    """Displayed equalities, as {quantity: value} after dividing out each factor."""
    a = e.parameters["alpha"]
    b = e.parameters.get("beta", Q(0))
    if e.family == "F1":
        v = a * a + b * b
        return {"R1212": v, "rho11": -v, "rho22": -v, "rho*12": v, "rho*21": v, "tau": -2 * v, "k12": -v}
    if e.family in ("F4", "F8", "F9"):
        v = a * a if e.family != "F8" else -a * a
        return {
            "R0101": v, "R0202": v, "R1212": -v, "rho00": -2 * v, "rho*12": -v, "rho*21": -v,
            "tau": -2 * v, "k01": -v, "k02": -v, "k12": v,
        }
    if e.family == "F5":
        v = a * a
        return {
            "R0101": v, "R0202": v, "R1212": v, "rho00": -2 * v, "rho11": -2 * v, "rho22": -2 * v,
            "rho*12": v, "rho*21": v, "tau": -6 * v, "k01": -v, "k02": -v, "k12": -v,
        }
    if e.family == "F11":
        return {
            "R0101": a * a, "rho11": -a * a, "k01": -a * a,
            "rho00": -(a * a + b * b), "tau": -2 * (a * a + b * b),
            "R0102": a * b, "rho12": -a * b, "rho*00": -2 * a * b, "tau*": -2 * a * b,
            "R0202": b * b, "rho22": -b * b, "k02": -b * b,
        }
    return {}


def quantities(r, d):
    out = {f"R{i}{j}{k}{l}": r[i, j, k, l] for i, j, k, l in itertools.product(range(3), repeat=4)}
    out.update({f"rho{i}{j}": d.rho[i, j] for i in range(3) for j in range(3)})
    out.update({f"rho*{i}{j}": d.rho_star[i, j] for i in range(3) for j in range(3)})
    out.update({"tau": d.tau, "tau*": d.tau_star, "k01": d.k01, "k02": d.k02, "k12": d.k12})
    return out


def test_criterion_3_curvature_table(capsys):
    failures, cases = [], 0
    for e in family_entries():
        _, r, d = pipeline(catalog_instantiate(e))
        got = quantities(r, d)
        for key, value in curvature_table(e).items():
            cases += 1
            if got[key] != value:
                failures.append(f"{e.label()} {key}: expected {value}, got {got[key]}")
        if e.family == "F10":
            cases += 1
            if not r.is_zero():
                failures.append(f"{e.label()} not flat")
    for family in FAMILIES:
        names = ("alpha", "beta") if family in TWO_PARAM else ("alpha",)
        for value in (0, 1):
            e = CatalogEntry.of(family, **dict.fromkeys(names, value))
            _, r, _ = pipeline(catalog_instantiate(e))
            cases += 1
            if r.is_zero() != (value == 0 or family == "F10"):
                failures.append(f"{e.label()}: flatness {r.is_zero()}")
    report(capsys, 3, "curvature theorem table and flatness", failures, cases)


def test_criterion_4_dual_path(capsys):
    failures, cases = [], 0
    inputs = [catalog_instantiate(e) for e in family_entries()]
    inputs += [catalog_instantiate(CatalogEntry.of("Example", a1=a, a2=b)) for a, b in EXAMPLE_POINTS]
    inputs += random_jacobi(100, seed=11)
    for s in inputs:
        cases += 1
        if fundamental_tensor_from_brackets(s) != fundamental_tensor_from_connection(levi_civita(s)):
            failures.append(f"routes disagree on {s.to_json()}")
    report(capsys, 4, "bracket route to F equals connection route", failures, cases)


def test_criterion_5_r3_and_kulkarni_nomizu(capsys):
    failures, cases = [], 0
    inputs = [catalog_instantiate(e) for e in family_entries()]
    inputs += [catalog_instantiate(CatalogEntry.of("Example", a1=a, a2=b)) for a, b in EXAMPLE_POINTS]
    inputs += random_jacobi(100, seed=11)
    for s in inputs:
        cases += 1
        _, r, d = pipeline(s)
        if not verify_r3_identity(r, d).is_zero():
            failures.append(f"3d identity residual nonzero on {s.to_json()}")
    rng = random.Random(5)
    for _ in range(30):
        sym = []
        for _ in range(2):
            v = {(i, j): Q(rng.randint(-6, 6), rng.randint(1, 3)) for i in range(3) for j in range(i, 3)}
            sym.append(Tensor.from_function(2, lambda i, j, v=v: v[min(i, j), max(i, j)]))
        cases += 1
        bad = [n for n, t in curvature_symmetry_residuals(kulkarni_nomizu(*sym)).items() if not t.is_zero()]
        if bad:
            failures.append(f"Kulkarni-Nomizu product lacks {bad}")
    report(capsys, 5, "3d curvature identity and Kulkarni-Nomizu symmetries", failures, cases)


def test_criterion_6_predicates(capsys):
    failures, cases, disagreements = [], 0, []
    inputs = [(e.label(), catalog_instantiate(e)) for e in family_entries()]
    inputs += [("mixed", MIXED)]
    inputs += [(f"random#{i}", s) for i, s in enumerate(random_jacobi(100, seed=23))]
    for label, s in inputs:
        d = classify(fundamental_tensor_from_brackets(s))
        members = set(d.membership)
        # class conditions restated from the theorems
        expect_g = members <= {"F8", "F10"} and 2 * d.lam == -d.nu
        expect_gt = members <= {"F8", "F9", "F10"} and 2 * d.lam == d.mu == d.nu
        expect_xi = members <= {"F1", "F8", "F10"}
        for name, literal, expected in (
            ("Killing g", bool(is_killing_metric(s, "g")), expect_g),
            ("Killing g~", bool(is_killing_metric(s, "g_tilde")), expect_gt),
            ("Killing xi", bool(is_killing_xi(s)), expect_xi),
        ):
            cases += 1
            if literal != expected:
                failures.append(f"{label} {name}: literal {literal}, class {expected}")
        assert killing_metric_class_condition(d, "g") == expect_g
        assert killing_xi_class_condition(d) == expect_xi
        if bool(is_biinvariant_phi(s)) != biinvariant_class_condition(d):
            disagreements.append(label)
    if not is_killing_metric(MIXED, "g"):
        failures.append("mixed algebra should be Killing for g")
    with capsys.disabled():
        print(f"\n[INFO] criterion 6: bi-invariance literal vs class condition differ on {len(disagreements)} inputs")
    report(capsys, 6, "Killing predicates agree with class conditions", failures, cases)


def test_criterion_7_einstein(capsys):
    failures, cases = [], 0
    expected_kind = {
        "F1": "l1-para-eta-Einstein",
        "F4": "l2-para-eta-Einstein",
        "F8": "l2-para-eta-Einstein",
        "F9": "l2-para-eta-Einstein",
        "F5": "Einstein",
    }
    for e in family_entries():
        s = catalog_instantiate(e)
        _, r, d = pipeline(s)
        if e.family in expected_kind:
            cases += 1
            kind = einstein_classify(d.rho, d.tau).kind
            if kind != expected_kind[e.family]:
                failures.append(f"{e.label()}: {kind}")
            ricci = {
                "F1": (G - EE) * (d.tau / 2),
                "F5": G * (d.tau / 3),
            }.get(e.family, EE * d.tau)
            cases += 1
            if d.rho != ricci:
                failures.append(f"{e.label()}: Ricci corollary fails")
        if e.family in ("F1", "F4", "F5", "F8", "F9", "F11"):
            residuals = curvature_form_check((e.family,), r, d.rho, d.tau, d.tau_star)
            for name, t in residuals.items():
                cases += 1
                if not t.is_zero():
                    failures.append(f"{e.label()}: {name} nonzero")
    report(capsys, 7, "Einstein proposition and curvature-form corollaries", failures, cases)


SIGNS = {
    # family: {quantity: required sign}
    "F1": {"tau": -1, "tau*": 0, "k01": 0, "k02": 0, "k12": -1},
    "F4": {"tau": -1, "tau*": 0, "k01": -1, "k02": -1, "k12": 1},
    "F5": {"tau": -1, "tau*": 0, "k01": -1, "k02": -1, "k12": -1},
    "F8": {"tau": 1, "tau*": 0, "k01": 1, "k02": 1, "k12": -1},
    "F9": {"tau": -1, "tau*": 0, "k01": -1, "k02": -1, "k12": 1},
    "F11": {"tau": -1, "k01": -1, "k02": -1, "k12": 0},
}


def sign(q):
    return (q > 0) - (q < 0)


def test_criterion_8_signs(capsys):
    failures, cases = [], 0
    rng = random.Random(8)

    def nonzero():
        while True:
            q = Q(rng.randint(-9, 9), rng.randint(1, 5))
            if q:
                return q

    for family, required in SIGNS.items():
        for _ in range(50):
            a, b = nonzero(), nonzero()
            params = {"alpha": a, "beta": b} if family in TWO_PARAM else {"alpha": a}
            e = CatalogEntry.of(family, **params)
            _, r, d = pipeline(catalog_instantiate(e))
            got = {"tau": d.tau, "tau*": d.tau_star, "k01": d.k01, "k02": d.k02, "k12": d.k12}
            for key, want in required.items():
                cases += 1
                if sign(got[key]) != want:
                    failures.append(f"{e.label()} {key} = {got[key]}")
            if family == "F11":
                cases += 2
                if d.tau_star != -2 * a * b or sign(d.tau_star) != -sign(a * b):
                    failures.append(f"{e.label()} tau* = {d.tau_star}")
                if (d.rho_star.is_zero()) != (a * b == 0):
                    failures.append(f"{e.label()} *-Ricci flatness")
    # the *-Ricci flat boundary of F11
    for a, b in ((0, 3), (2, 0), (1, 1)):
        _, _, d = pipeline(catalog_instantiate(CatalogEntry.of("F11", alpha=a, beta=b)))
        cases += 1
        if (d.rho_star.is_zero() and d.tau_star == 0) != (a * b == 0):
            failures.append(f"F11({a},{b}) *-Ricci flatness")
    report(capsys, 8, "characterization theorem signs", failures, cases)


def test_criterion_9_infrastructure(capsys):
    failures, cases = [], 0
    values = [Q(-1), Q(1, 2), Q(2)]
    for six in itertools.product(values, repeat=6):
        c01_0, c02_0, c12_1, c12_2, c01_1, c02_2 = six
        if 0 in (c01_1 + c02_2, c01_0 - c12_2, c02_0 + c12_1):
            cases += 1
            try:
                jacobi_complete(*six)
                failures.append(f"{six}: degenerate point accepted")
            except DegenerateDenominatorError:
                pass
            continue
        cases += 1
        if not jacobi_residual(jacobi_complete(*six)).is_zero():
            failures.append(f"{six}: completion fails Jacobi")
    for six in ((0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1)):
        cases += 1
        try:
            jacobi_complete(*six)
            failures.append(f"{six}: should raise")
        except DegenerateDenominatorError:
            pass

    runner = CliRunner()
    for a1, a2 in EXAMPLE_POINTS:
        doc = json.dumps({"family": "Example", "a1": str(a1), "a2": str(a2)})
        for args in (["classify", doc], ["curvature", doc], ["check", doc, "para-sasakian"]):
            for flags in ([], ["--json"]):
                first = runner.invoke(main, args + flags)
                second = runner.invoke(main, args + flags)
                cases += 1
                if first.exit_code != 0 or first.stdout_bytes != second.stdout_bytes:
                    failures.append(f"{args[0]} {flags} on ({a1},{a2}) not reproducible")
        curv = json.loads(runner.invoke(main, ["curvature", doc, "--json"]).output)["curvature"]
        _, expected = example_expectations(a1, a2)
        keys = {
            "R0101": curv["R"].get("0101"), "R0202": curv["R"].get("0202"), "R1212": curv["R"].get("1212"),
            "rho00": curv["rho"].get("00"), "tau": curv["tau"],
            "rho*12": curv["rho_star"].get("12"), "rho*21": curv["rho_star"].get("21"),
            "k01": curv["k01"], "k02": curv["k02"], "k12": curv["k12"],
        }
        for key, value in expected.items():
            cases += 1
            if keys[key] is None or Q(keys[key]) != value:
                failures.append(f"CLI ({a1},{a2}) {key}: {keys[key]} vs {value}")
        check = runner.invoke(main, ["check", doc, "para-sasakian"]).output.splitlines()[0]
        cases += 1
        if check != f"para-sasakian: {'yes' if (a1, a2) == (0, 1) else 'no'}":
            failures.append(f"CLI ({a1},{a2}) para-sasakian line {check!r}")
    report(capsys, 9, "Jacobi completion and reproducible CLI output", failures, cases)
