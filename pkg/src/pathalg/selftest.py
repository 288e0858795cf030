"""Embedded expected-value fixtures, runnable via `example ... --self-test`.

Each check compares machinery output against the registry's reference
tables; the result is a flat {check: bool} dict so two runs on identical
input are byte-identical when serialized.
"""

from __future__ import annotations

from .ambiguities import AmbiguityEnumerator
from .completion import complete, overlaps, resolve_overlap
from .examples import (build_example, cubic_example, cubic_r1_rules,
                       down_up_cy_check, down_up_expected_d1_d2,
                       down_up_expected_duals, qci_expected_differential,
                       qci_generator)
from .resolution import Resolution, koszul_report


def run_self_test(name, params, length_cap=64, fuel=200_000):
    ex = build_example(name, **params)
    if name == "cubic":
        return _cubic_checks(ex, length_cap, fuel)
    if name in ("happel", "qci"):
        return _qci_checks(ex, length_cap, fuel)
    if name == "down-up":
        return _down_up_checks(ex, length_cap, fuel)
    raise AssertionError(name)


def _cubic_checks(ex, length_cap, fuel):
    out = {}
    variant = ex.params["system"]
    if variant in ("initial", "R1"):
        seed = cubic_example("initial")
        result = complete(seed.system, seed.order, fuel=fuel)
        expected = cubic_r1_rules(ex.field, ex.quiver)
        got = [(r.tip, r.rhs) for r in result.system.rules]
        out["completion_terminates"] = result.status == "complete"
        out["completion_matches_reference"] = (
            sorted(got, key=lambda p: p[0].skey)
            == sorted(expected, key=lambda p: p[0].skey))
        final = [o for o in overlaps(result.system)
                 if ex.quiver.path_str(o.path) == "yyyzzz"]
        out["final_overlap_resolves"] = bool(final) and \
            resolve_overlap(result.system, final[0], fuel).resolvable
    if variant == "R2":
        enum = AmbiguityEnumerator(ex.system)
        out["no_higher_ambiguities"] = all(
            not enum.degree(n, length_cap)[0] for n in range(2, 7))
        res = Resolution(ex.system, ex.order, length_cap=length_cap,
                         fuel=fuel)
        out["resolution_length_2"] = res.resolution_length(4) == 2
        rep = koszul_report(ex.system)
        out["three_homogeneous"] = rep["homogeneous_length"] == 3
        out["chain_growth"] = rep["chain_growth"]
    return out


def _qci_checks(ex, length_cap, fuel):
    out = {}
    n, m = ex.params["n"], ex.params["m"]
    enum = AmbiguityEnumerator(ex.system)
    top = 5 if not ex.params["monomial"] else 4
    ok = True
    for N in range(1, top + 1):
        got = {a.path for a in enum.degree(N, length_cap)[0]}
        want = {qci_generator(ex, s, N + 1 - s) for s in range(N + 2)}
        ok = ok and got == want
    out["ambiguity_formula"] = ok
    res = Resolution(ex.system, ex.order, length_cap=length_cap, fuel=fuel)
    res.extend(top)
    if ex.params["monomial"]:
        out["monomial_delta_agreement"] = all(
            res.differential(N)[q] == res.delta(N, q)
            for N in range(1, top + 1) for q in res.generators(N))
    else:
        ok = True
        for N in range(1, top + 1):
            for s in range(0, N + 2):
                q = qci_generator(ex, s, N + 1 - s)
                ok = ok and res.differential(N)[q] == \
                    qci_expected_differential(ex, N, s, N + 1 - s)
        out["closed_form_differentials"] = ok
        out["minimal"] = all(res.minimality(top).values())
    return out


def _down_up_checks(ex, length_cap, fuel):
    out = {}
    enum = AmbiguityEnumerator(ex.system)
    two = [ex.quiver.path_str(a.path) for a in enum.degree(2, length_cap)[0]]
    out["two_ambiguities"] = two == ["dduu"]
    out["no_higher_ambiguities"] = not enum.degree(3, length_cap)[0]
    res = Resolution(ex.system, ex.order, length_cap=length_cap, fuel=fuel)
    res.extend(3)
    d1_ref, d2_ref = down_up_expected_d1_d2(ex)
    out["d1_matches"] = all(res.differential(1)[q] == v
                            for q, v in d1_ref.items())
    out["d2_matches"] = all(res.differential(2)[q] == v
                            for q, v in d2_ref.items())
    dual = res.dual_tables(3)
    delta0_ref, d1s_ref, d2s_ref = down_up_expected_duals(ex)
    e = ex.quiver.trivial(0)
    out["dual_matches"] = (
        dual[0][e] == delta0_ref
        and all(dual[1][q] == v for q, v in d1s_ref.items())
        and all(dual[2][q] == v for q, v in d2s_ref.items()))
    if not ex.params["beta"].is_zero():
        texts = {k: ex.field.to_text(ex.params[k])
                 for k in ("alpha", "beta", "gamma")}
        args = {k: (None if v in ex.field.params else v)
                for k, v in texts.items()}
        rep = down_up_cy_check(args["alpha"], args["beta"], args["gamma"],
                               length_cap=length_cap, fuel=fuel)
        out["cy_diagram_commutes"] = rep["diagram_commutes"]
        minus_one = ex.field.zero - ex.field.one
        out["cy_iff_beta_is_minus_one"] = (
            rep["self_dual"] == (ex.params["beta"] == minus_one))
    return out
