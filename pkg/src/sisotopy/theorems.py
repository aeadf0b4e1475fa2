"""Instance-level audits of the two isotopy theorems for S-quasigroups.

The pairing theorem: when SAUM(U) and SAUM(V) are conjugate inside SSYM, the
Smarandache holomorphs of U and V are S-isomorphic exactly when

    xδ ⊗ yγ = (xβ ⊕ y)δ   for all x, y, every β in SAUM(U), some δ, γ in SAUM(V).

The variety theorem: S-quasigroups related by the triple (δ⁻¹β, γ⁻¹, δ⁻¹) under
that hypothesis lie in the same varieties.

Nothing here assumes either statement.  Each side is computed independently and
any disagreement lands in ``TheoremReport.discrepancies``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .holomorph import HolomorphTable, build_holomorph, holomorph_s_pair
from .morphisms import (
    Isotopism,
    PermGroup,
    apply_isotopism,
    autotopism_set,
    find_conjugator,
    find_isomorphism,
    is_isomorphism,
    saum,
    ssym,
    verify_isotopism,
)
from .perm import Perm
from .substructure import SPair, make_spair
from .errors import SPairError
from .tables import CayleyTable, classify, translation
from .varieties import CATALOG, VarietyDef, smarandache_variety_check, variety_profile


@dataclass(frozen=True)
class PairingWitness:
    beta: Perm
    delta: Perm | None
    gamma: Perm | None
    psi: Perm | None
    satisfied: bool

    def to_json(self) -> dict:
        def p(x):
            return None if x is None else list(x.images)

        return {
            "beta": p(self.beta),
            "delta": p(self.delta),
            "gamma": p(self.gamma),
            "psi": p(self.psi),
            "satisfied": self.satisfied,
        }


@dataclass
class TheoremReport:
    statement: str
    hypothesis: dict
    witnesses: list = field(default_factory=list)
    conclusion: dict | None = None
    discrepancies: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    @property
    def hypothesis_ok(self) -> bool:
        return bool(self.hypothesis.get("satisfied"))

    def discrepancies_of(self, *kinds: str) -> list[dict]:
        return [d for d in self.discrepancies if d["kind"] in kinds]

    def to_json(self) -> dict:
        # deferred import: report depends on modules that import this one
        from .report import to_jsonable

        return to_jsonable({
            "statement": self.statement,
            "hypothesis": self.hypothesis,
            "witnesses": self.witnesses,
            "conclusion": self.conclusion,
            "discrepancies": self.discrepancies,
            "notes": self.notes,
            "observations": self.observations,
        })


# ---------------------------------------------------------------- pairing condition


def _pairing_failure(u: CayleyTable, v: CayleyTable, beta, delta, gamma):
    n = u.order
    b, d, g = beta.images, delta.images, gamma.images
    ur, vr = u.rows, v.rows
    for x in range(n):
        dx = vr[d[x]]
        bx = ur[b[x]]
        for y in range(n):
            if dx[g[y]] != d[bx[y]]:
                return (x, y)
    return None


def check_pairing(
    u: SPair, v: SPair, beta: Perm, delta: Perm, gamma: Perm
) -> tuple[bool, tuple[int, int] | None]:
    """Exhaustive check of ``xδ ⊗ yγ == (xβ ⊕ y)δ``; returns the least failing cell."""
    if u.order != v.order:
        raise ValueError("pairing needs equal orders")
    if beta not in saum(u):
        raise ValueError("beta must lie in SAUM(U)")
    sv = saum(v)
    if delta not in sv or gamma not in sv:
        raise ValueError("delta and gamma must lie in SAUM(V)")
    cell = _pairing_failure(u.table, v.table, beta, delta, gamma)
    return cell is None, cell


def pairing_search(
    u: SPair, v: SPair, psi: Perm | None = None, sa: PermGroup | None = None, sb: PermGroup | None = None
) -> list[PairingWitness]:
    """For each β in SAUM(U), the least (δ, γ) in SAUM(V)² meeting the condition."""
    sa = saum(u) if sa is None else sa
    sb = saum(v) if sb is None else sb
    out = []
    for beta in sa:
        hit = None
        for delta in sb:
            for gamma in sb:
                if _pairing_failure(u.table, v.table, beta, delta, gamma) is None:
                    hit = (delta, gamma)
                    break
            if hit:
                break
        if hit:
            out.append(PairingWitness(beta, hit[0], hit[1], psi, True))
        else:
            out.append(PairingWitness(beta, None, None, psi, False))
    return out


def special_triple(beta: Perm, gamma: Perm, delta: Perm) -> Isotopism:
    """``(δ⁻¹β, γ⁻¹, δ⁻¹)``; products read left to right."""
    if not beta.degree == gamma.degree == delta.degree:
        raise ValueError("beta, gamma and delta must share a degree")
    dinv = delta.inverse()
    return Isotopism(dinv * beta, gamma.inverse(), dinv)


def is_initial(pair: SPair) -> bool:
    """True when the table fails at least one catalog identity."""
    return "fails" in variety_profile(pair.table).values()


# ---------------------------------------------------------------- holomorph maps


def proof_map(hu: HolomorphTable, hv: HolomorphTable, psi: Perm) -> dict:
    """Test ``(α, x) -> (ψ⁻¹αψ, x ψ⁻¹αψ)`` as a map between the holomorphs."""
    n = hu.base.order
    index_v = {p: i for i, p in enumerate(hv.group.elements)}
    images = []
    for a, alpha in enumerate(hu.group.elements):
        conj = alpha.conjugate_by(psi)
        if conj not in index_v:
            return {"defined": False, "bijective": False, "homomorphism": False, "preserves_designated": False}
        b = index_v[conj]
        images.extend(n * b + conj[x] for x in range(n))
    if hu.order != hv.order or len(set(images)) != len(images):
        return {"defined": True, "bijective": False, "homomorphism": False, "preserves_designated": False}
    phi = Perm(tuple(images))
    return {
        "defined": True,
        "bijective": True,
        "homomorphism": is_isomorphism(hu.table, hv.table, phi),
        "preserves_designated": phi.image_of(hu.designated or ()) == frozenset(hv.designated or ()),
    }


# ---------------------------------------------------------------- pairing theorem


def _require_s_quasigroups(*pairs: SPair):
    for p in pairs:
        if not classify(p.table).is_quasigroup:
            raise ValueError("theorem audits need S-quasigroups (Latin square tables)")
    if len({p.order for p in pairs}) != 1:
        raise ValueError("order mismatch between the S-quasigroups")


def verify_theorem_31(u: SPair, v: SPair, corollaries: bool = True) -> TheoremReport:
    """Audit the pairing theorem on one pair of S-quasigroups.

    Hypothesis: a conjugator ψ in SSYM (of U's designated subset) carrying
    SAUM(U) onto SAUM(V).  Then, independently:

    * per-β search for (δ, γ) satisfying the pairing condition,
    * the proof's choice δ = ψ⁻¹αβψ, γ = ψ⁻¹βψ over all α, β,
    * an S-isomorphism search between the two Smarandache holomorphs, plus
      the explicit map from the proof tried as a candidate.

    Disagreement between pairing and S-isomorphism is a discrepancy.
    """
    _require_s_quasigroups(u, v)
    sa, sb = saum(u), saum(v)
    ambient = ssym(u)
    psi = find_conjugator(sa, sb, ambient)
    hyp = {
        "satisfied": psi is not None,
        "conjugator": psi,
        "ambient": "SSYM(U)",
        "ambient_order": ambient.order,
        "saum_orders": [sa.order, sb.order],
        "saums_nontrivial": sa.order > 1 and sb.order > 1,
        "initial": {"U": is_initial(u), "V": is_initial(v)},
    }
    report = TheoremReport("pairing-holomorph", hyp)
    if psi is None:
        report.notes.append("SAUM(U) and SAUM(V) are not conjugate in SSYM(U); conclusion not attempted")
        return report

    witnesses = pairing_search(u, v, psi, sa, sb)
    report.witnesses = witnesses
    pairing_all = all(w.satisfied for w in witnesses)

    proof_failure = None
    for alpha in sa:
        for beta in sa:
            delta = (alpha * beta).conjugate_by(psi)
            gamma = beta.conjugate_by(psi)
            cell = _pairing_failure(u.table, v.table, beta, delta, gamma)
            if cell is not None:
                proof_failure = {"alpha": alpha, "beta": beta, "cell": list(cell)}
                break
        if proof_failure:
            break

    hu = build_holomorph(u.table, "smarandache", u)
    hv = build_holomorph(v.table, "smarandache", v)
    phi = find_isomorphism(holomorph_s_pair(hu), holomorph_s_pair(hv))
    pmap = proof_map(hu, hv, psi)
    report.conclusion = {
        "pairing_all_beta": pairing_all,
        "proof_form_pairing": proof_failure is None,
        "proof_form_failure": proof_failure,
        "holomorph_orders": [hu.order, hv.order],
        "s_isomorphic": phi is not None,
        "s_isomorphism": phi,
        "proof_map": pmap,
        "agreement": pairing_all == (phi is not None),
    }
    if pairing_all and phi is None:
        report.discrepancies.append({
            "kind": "forward",
            "detail": "pairing holds for every beta but no S-isomorphism of the Smarandache holomorphs exists",
        })
    if phi is not None and not pairing_all:
        report.discrepancies.append({
            "kind": "reverse",
            "detail": "holomorphs are S-isomorphic but some beta has no (delta, gamma) pairing",
        })
    if proof_failure is None and not pmap["homomorphism"]:
        report.discrepancies.append({
            "kind": "proof-map",
            "detail": "proof-form pairing holds yet the proof's map is not a homomorphism",
        })
    if pmap["homomorphism"] and not pmap["preserves_designated"]:
        report.notes.append(
            "the proof's map is an isomorphism of holomorphs but does not carry L' x SAUM(U) onto L'' x SAUM(V)"
        )
    if corollaries:
        for w in witnesses:
            if w.satisfied:
                items = corollary_checks_31(u, v, w)
                report.observations.setdefault("corollaries", []).append(
                    {"beta": w.beta, "items": items}
                )
                for item in items:
                    if item["agrees"] is False:
                        report.discrepancies.append({
                            "kind": "corollary",
                            "item": item["item"],
                            "beta": w.beta,
                            "detail": item["detail"],
                        })
    return report


def corollary_checks_31(u: SPair, v: SPair, w: PairingWitness) -> list[dict]:
    """Evaluate the theorem's listed consequences on one satisfied witness.

    Translations ``L_x``, ``R_x`` are those of V evaluated at ``eδ`` and ``eγ``,
    where ``e`` is the identity of U.
    """
    if not w.satisfied:
        raise ValueError("corollary checks need a satisfied pairing witness")
    beta, delta, gamma = w.beta, w.delta, w.gamma
    sa, sb = saum(u), saum(v)
    n = u.order
    ident = Perm.identity(n)
    items = []

    in_saut = Isotopism(ident, gamma, delta) in autotopism_set(v.table, v)
    lhs = gamma in sa
    items.append({
        "item": "gamma-in-saum-u-iff-autotopism",
        "claim": "gamma in SAUM(U) iff (I, gamma, delta) in SAUT(V)",
        "observed": {"gamma_in_saum_u": lhs, "triple_in_saut_v": in_saut},
        "agrees": lhs == in_saut,
        "detail": f"gamma in SAUM(U): {lhs}; (I,gamma,delta) in SAUT(V): {in_saut}",
    })

    ucls = classify(u.table)
    if ucls.is_loop and classify(v.table).is_quasigroup:
        e = ucls.identity
        left = translation(v.table, delta[e], "left")
        right = translation(v.table, gamma[e], "right")
        items.append({
            "item": "left-translation-in-saum-v",
            "claim": "L_(e delta) in SAUM(V)",
            "observed": {"in_saum_v": left in sb},
            "agrees": left in sb,
            "detail": f"L_{delta[e]} of V in SAUM(V): {left in sb}",
        })
        b_in, r_in = beta in sb, right in sb
        items.append({
            "item": "beta-iff-right-translation",
            "claim": "beta in SAUM(V) iff R_(e gamma) in SAUM(V)",
            "observed": {"beta_in_saum_v": b_in, "right_translation_in_saum_v": r_in},
            "agrees": b_in == r_in,
            "detail": f"beta in SAUM(V): {b_in}; R_{gamma[e]} of V in SAUM(V): {r_in}",
        })
        ok_l = gamma * left == delta
        ok_r = delta * right == beta * delta
        items.append({
            "item": "translation-identities",
            "claim": "gamma L_(e delta) = delta and delta R_(e gamma) = beta delta",
            "observed": {"left_identity": ok_l, "right_identity": ok_r},
            "agrees": ok_l and ok_r,
            "detail": f"gamma L = delta: {ok_l}; delta R = beta delta: {ok_r}",
        })
    else:
        items.append({
            "item": "loop-translations",
            "claim": "translation statements for an S-loop U",
            "observed": {"u_is_loop": ucls.is_loop},
            "agrees": None,
            "detail": "U is not a loop; not evaluated",
        })

    if delta.is_identity():
        ok = sa.order == sb.order == 3 and sa.is_boolean() and sb.is_boolean()
        items.append({
            "item": "delta-identity-orders",
            "claim": "delta = I gives |SAUM(U)| = |SAUM(V)| = 3, both boolean",
            "observed": {
                "orders": [sa.order, sb.order],
                "boolean": [sa.is_boolean(), sb.is_boolean()],
            },
            "agrees": ok,
            "detail": f"observed orders {sa.order}, {sb.order}; boolean {sa.is_boolean()}, {sb.is_boolean()}",
        })
    if gamma.is_identity():
        ok = sa.order == sb.order == 1
        items.append({
            "item": "gamma-identity-orders",
            "claim": "gamma = I gives |SAUM(U)| = |SAUM(V)| = 1",
            "observed": {"orders": [sa.order, sb.order]},
            "agrees": ok,
            "detail": f"observed orders {sa.order}, {sb.order}",
        })
    return items


# ---------------------------------------------------------------- variety theorem


def _variety_comparison(u: SPair, v: SPair, varieties: Sequence[VarietyDef]) -> dict:
    rows = {}
    for var in varieties:
        ok_u, _ = smarandache_variety_check(u, var)
        ok_v, _ = smarandache_variety_check(v, var)
        rows[var.name] = {"U": ok_u, "V": ok_v, "agree": ok_u == ok_v}
    return rows


def verify_theorem_32(
    u: SPair,
    beta: Perm,
    gamma: Perm,
    delta: Perm,
    varieties: Sequence[VarietyDef] | None = None,
) -> TheoremReport:
    """Audit the variety theorem for U and the isotope fixed by (β, γ, δ).

    V is the S-quasigroup for which the special triple (δ⁻¹β, γ⁻¹, δ⁻¹) is an
    S-isotopism from V onto U, i.e. the isotope of U under (β⁻¹δ, γ, δ) with
    designated subset L'δ.  That is the orientation under which the pairing
    condition of the holomorph theorem holds.
    """
    _require_s_quasigroups(u)
    varieties = list(CATALOG.values()) if varieties is None else list(varieties)
    n = u.order
    sa = saum(u)
    if beta not in sa:
        raise ValueError("beta must lie in SAUM(U)")
    triple = special_triple(beta, gamma, delta)
    v_table = apply_isotopism(u.table, triple.inverse())
    v_subset = sorted(delta.image_of(u.subset))
    hyp: dict = {"triple": triple, "v_subset": v_subset}
    report = TheoremReport("variety-isotopy", hyp)
    report.notes.append("holomorphs are the Smarandache ones, built over SAUM")
    try:
        v = make_spair(v_table, v_subset)
    except SPairError as exc:
        hyp.update(satisfied=False, v_valid=False, v_error=str(exc))
        report.observations["v_table"] = v_table
        return report

    sb = saum(v)
    verdict = verify_isotopism(v, u, triple)
    psi = find_conjugator(sa, sb, ssym(u))
    pairing = pairing_search(u, v, psi, sa, sb)
    hyp.update(
        v_valid=True,
        s_isotopism=bool(verdict.is_s_isotopism),
        gamma_delta_in_saum_v=gamma in sb and delta in sb,
        saum_orders=[sa.order, sb.order],
        saums_nontrivial=sa.order > 1 and sb.order > 1,
        conjugator=psi,
        conjugate=psi is not None,
        pairing_all_beta=all(w.satisfied for w in pairing),
        initial={"U": is_initial(u), "V": is_initial(v)},
    )
    hyp["satisfied"] = all(
        hyp[k]
        for k in ("s_isotopism", "gamma_delta_in_saum_v", "saums_nontrivial", "conjugate", "pairing_all_beta")
    )
    report.witnesses = pairing
    comparison = _variety_comparison(u, v, varieties)
    report.observations["v_table"] = v_table
    report.observations["s_varieties"] = comparison
    report.observations["table_profiles"] = {
        "U": variety_profile(u.table, varieties),
        "V": variety_profile(v.table, varieties),
    }
    if not hyp["satisfied"]:
        report.notes.append("hypothesis not met; conclusion not attempted")
        return report

    hu = build_holomorph(u.table, "smarandache", u)
    hv = build_holomorph(v.table, "smarandache", v)
    phi = find_isomorphism(holomorph_s_pair(hu), holomorph_s_pair(hv))
    report.conclusion = {
        "varieties": comparison,
        "all_agree": all(r["agree"] for r in comparison.values()),
        "holomorphs_s_isomorphic": phi is not None,
    }
    for name, row in comparison.items():
        if not row["agree"]:
            report.discrepancies.append({
                "kind": "variety",
                "variety": name,
                "detail": f"S-variety verdict differs: U {row['U']}, V {row['V']}",
            })
    if phi is None:
        report.discrepancies.append({
            "kind": "holomorph",
            "detail": "hypothesis met but Smarandache holomorphs are not S-isomorphic",
        })
    return report
