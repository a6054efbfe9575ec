"""JSON-ready analysis report for a single network.

Key order is fixed; every value is a plain JSON type so
``json.loads(json.dumps(r)) == r`` holds.  Rationals are written as strings
(``"1"``, ``"1/2"``).  The schema lives in ``docs/report_schema.json``.
"""

from __future__ import annotations

from .classify import classify_by_binomial, classify_by_reactants, detect_acr
from .massaction import (
    factor_common_monomial,
    normalized_residual,
    reactant_matrix,
    steady_state_polynomials,
    stoichiometric_matrix,
)
from .network import Network, canonical_key, serialize
from .oracle import (
    OracleConfig,
    UnsupportedNetwork,
    find_positive_steady_state,
    identify_class,
    network_seed,
    sample_rates,
    sample_variety,
)
from .pssv import canonical_binomial, pssv_status


def polys_json(polys) -> list[dict]:
    return [
        {
            "species": p.species_index,
            "terms": [
                {"coeff": t.coeff, "rate": t.rate_index, "exponents": list(t.monomial.exponents)}
                for t in p.terms
            ],
        }
        for p in polys
    ]


def _oracle_summary(net: Network, rates, cfg: OracleConfig) -> dict:
    polys = steady_state_polynomials(net)
    x = find_positive_steady_state(net, rates, cfg)
    out = {
        "rates": list(rates),
        "witness": None if x is None else [float(v) for v in x],
        "witness_residual": None if x is None else normalized_residual(polys, rates, x),
        "sample_max_residual": None,
        "sampled_class": None,
    }
    if canonical_binomial(net) is not None:
        sample = sample_variety(net, rates, cfg)
        out["sample_max_residual"] = sample.max_residual
        if net.n_species == 2:
            out["sampled_class"] = identify_class(sample).value
    return out


def analysis_report(
    net: Network,
    rates=None,
    verify: bool = False,
    cfg: OracleConfig | None = None,
    draws: int = 10,
) -> dict:
    """Symbolic analysis of ``net`` plus optional numeric checks.

    ``rates`` adds an oracle summary at those rates; ``verify`` adds one per
    seeded rate draw.  Raises :class:`UnsupportedNetwork` when a numeric
    step has no solver for the network.
    """
    cfg = cfg or OracleConfig()
    polys = steady_state_polynomials(net)
    common, residuals = factor_common_monomial(polys)
    status = pssv_status(net)
    b = canonical_binomial(net)

    report: dict = {
        "network": serialize(net),
        "canonical": canonical_key(net),
        "species": list(net.species_names),
        "stoichiometric_matrix": stoichiometric_matrix(net).tolist(),
        "reactant_matrix": reactant_matrix(net).tolist(),
        "polynomials": polys_json(polys),
        "common_monomial": list(common.exponents),
        "residuals": polys_json(residuals),
        "pssv": {
            "status": status.tag.value,
            "tuning_ratio": None if status.tuning_ratio is None else str(status.tuning_ratio),
            "binomial": None
            if b is None
            else {"u": list(b.u), "q": str(b.q), "g": b.g, "rate_power": b.rate_power},
        },
        "classification": None,
        "oracle": None,
    }
    if net.n_species == 2 and net.n_reactions == 2:
        acr = detect_acr(net)
        report["classification"] = {
            "class": classify_by_reactants(net).value,
            "by_binomial": None if b is None else classify_by_binomial(b).value,
            "acr": None if acr is None else {"species": acr.species_name, "value": acr.value_str},
        }
    if rates is not None or verify:
        if net.n_reactions != 2 and net.n_species != 1:
            raise UnsupportedNetwork("numeric checks need 2 reactions or 1 species")
        oracle: dict = {"seed": cfg.seed, "given": None, "draws": []}
        if rates is not None:
            oracle["given"] = _oracle_summary(net, rates, cfg)
        if verify:
            stream = network_seed(net)
            for draw in range(draws):
                r = sample_rates(net.n_reactions, cfg, draw, stream)
                oracle["draws"].append(_oracle_summary(net, tuple(r.values), cfg))
        report["oracle"] = oracle
    return report


def format_report(report: dict, style=lambda s: s) -> str:
    """Plain-text rendering; ``style`` decorates section headings."""
    names = report["species"]
    lines = [style("network"), *("  " + ln for ln in report["network"].splitlines())]
    lines.append(style("stoichiometric matrix N"))
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in report["stoichiometric_matrix"]]
    lines.append(style("reactant matrix B"))
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in report["reactant_matrix"]]
    lines.append(style("steady-state polynomials"))
    for p in report["polynomials"]:
        lines.append(f"  f_{names[p['species']]} = {_poly_str(p, names)}")
    common = report["common_monomial"]
    if any(common):
        lines.append(style("common monomial"))
        lines.append("  " + _mono_str(common, names))
        for p in report["residuals"]:
            lines.append(f"  residual f_{names[p['species']]} = {_poly_str(p, names)}")
    pssv = report["pssv"]
    lines.append(style("positive steady-state variety"))
    lines.append(f"  status: {pssv['status']}")
    if pssv["tuning_ratio"] is not None:
        lines.append(f"  nonempty only at k1 = {pssv['tuning_ratio']}*k2")
    if pssv["binomial"] is not None:
        bn = pssv["binomial"]
        lines.append(f"  relation: {_mono_str(bn['u'], names)} = {_coef_str(bn)}")
    cls = report["classification"]
    if cls is not None:
        lines.append(f"  class: {cls['class']} (binomial: {cls['by_binomial']})")
        if cls["acr"] is not None:
            lines.append(f"  ACR in {cls['acr']['species']} = {cls['acr']['value']}")
    if report["oracle"] is not None:
        lines.append(style("oracle"))
        o = report["oracle"]
        for label, s in [("given", o["given"])] + [(f"draw {i}", d) for i, d in enumerate(o["draws"])]:
            if s is None:
                continue
            rates = ",".join(f"{r:.6g}" for r in s["rates"])
            wit = "none" if s["witness"] is None else ",".join(f"{v:.6g}" for v in s["witness"])
            extra = f" class={s['sampled_class']}" if s["sampled_class"] else ""
            lines.append(f"  {label}: k=({rates}) witness=({wit}){extra}")
    return "\n".join(lines)


def _mono_str(exps, names) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
    return "*".join(parts) if parts else "1"


def _coef_str(bn: dict) -> str:
    ratio = "k2/k1" if bn["rate_power"] == 1 else "k1/k2"
    base = ratio if bn["q"] == "1" else f"{bn['q']}*{ratio}"
    return base if bn["g"] == 1 else f"({base})^(1/{bn['g']})"


def _poly_str(p: dict, names) -> str:
    if not p["terms"]:
        return "0"
    out = ""
    for t in p["terms"]:
        mono = _mono_str(t["exponents"], names)
        body = f"k{t['rate']}" + ("" if mono == "1" else f"*{mono}")
        c = t["coeff"]
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not out:
            out = ("-" if c < 0 else "") + mag + body
        else:
            out += (" - " if c < 0 else " + ") + mag + body
    return out
