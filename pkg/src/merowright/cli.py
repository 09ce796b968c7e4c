"""Command-line front end.

Subcommands: sigma, member, extremal, bounds, radii, convolve, verify.
Configuration comes from a JSON file (--config) plus command-line flags;
flags win.  Exit codes: 0 all checks pass, 1 a mathematical check failed,
2 invalid configuration.  Reports go to stdout or --out in json, csv, or
text form; --plot-dir additionally renders PNG figures for table-shaped
output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import report as rpt
from .closure import (
    bounded_multiplier_convolve,
    convolution_order,
    quadratic_combination,
    quadratic_mean_order,
)
from .errors import (
    ClassPreconditionError,
    DegenerateInputError,
    DomainError,
    GammaOverflowError,
    NotAMemberError,
    UnsupportedParametersError,
)
from .gamma_kernel import WrightParams, log_sigma_k, sigma_k
from .members import random_member
from .membership import (
    ClassParams,
    coefficient_bound,
    distortion_bounds,
    distortion_hypothesis_ok,
    extremal_function,
    growth_bounds,
    growth_hypothesis_ok,
    membership_margin,
)
from .radii import (
    ConvexCondition,
    StarlikeCondition,
    convex_radius,
    numeric_radius,
    starlike_radius,
)
from .series import BoundedMultiplier, MeroFunction, hadamard
from .verifier import (
    SamplingPlan,
    verify_distortion,
    verify_growth,
    verify_membership_analytic,
    verify_radius,
)

# Seed for the verify bundle's random member; fixed so that identical
# inputs always produce bit-identical certificates.
_BUNDLE_SEED = 1


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    wright: WrightParams
    cls: ClassParams
    function: MeroFunction | None
    function2: tuple[float, ...] | None
    k_max: int
    plan: SamplingPlan
    bisection_tol: float
    equality_slack: float

    def echo(self) -> dict:
        return {
            "wright": {
                "upper": [list(p) for p in self.wright.upper],
                "lower": [list(p) for p in self.wright.lower],
            },
            "class": {"alpha": self.cls.alpha, "eta": self.cls.eta},
            "function": (
                {"coeffs": list(self.function.coeffs)} if self.function is not None else None
            ),
            "function2": (
                {"coeffs": list(self.function2)} if self.function2 is not None else None
            ),
            "k_max": self.k_max,
            "plan": self.plan.to_dict(),
            "tolerances": {
                "bisection_tol": self.bisection_tol,
                "equality_slack": self.equality_slack,
            },
        }


def _check_keys(doc: dict, allowed: set[str], where: str) -> None:
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError(f"unknown config keys in {where}: {', '.join(unknown)}")


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fp:
            doc = json.load(fp)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")
    _check_keys(
        doc, {"wright", "class", "function", "function2", "plan", "tolerances", "k_max"}, "root"
    )
    return doc


def _pairs(entries, where: str) -> tuple[tuple[float, float], ...]:
    out = []
    for entry in entries:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ConfigError(f"{where} entries must be [value, weight] pairs")
        out.append((float(entry[0]), float(entry[1])))
    return tuple(out)


def build_config(args: argparse.Namespace) -> RunConfig:
    doc = _load_config_file(args.config) if args.config else {}

    wright_doc = doc.get("wright", {})
    _check_keys(wright_doc, {"upper", "lower"}, "wright")
    try:
        wright = WrightParams(
            _pairs(wright_doc.get("upper", [[1.0, 1.0]]), "wright.upper"),
            _pairs(wright_doc.get("lower", [[1.0, 1.0]]), "wright.lower"),
        )
    except (DomainError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid wright parameters: {exc}") from exc

    class_doc = doc.get("class", {})
    _check_keys(class_doc, {"alpha", "eta"}, "class")
    alpha = args.alpha if args.alpha is not None else class_doc.get("alpha", 0.5)
    eta = args.eta if args.eta is not None else class_doc.get("eta", 1.0)
    try:
        cls = ClassParams(float(alpha), float(eta))
    except (DomainError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid class parameters: {exc}") from exc

    def _function(key: str):
        fdoc = doc.get(key)
        if fdoc is None:
            return None
        _check_keys(fdoc, {"coeffs"}, key)
        coeffs = fdoc.get("coeffs", [])
        if not isinstance(coeffs, list):
            raise ConfigError(f"{key}.coeffs must be a list of numbers")
        return tuple(float(c) for c in coeffs)

    fun = _function("function")
    try:
        function = MeroFunction(fun) if fun is not None else None
    except DomainError as exc:
        raise ConfigError(f"invalid function: {exc}") from exc
    function2 = _function("function2")

    plan_doc = doc.get("plan", {})
    _check_keys(plan_doc, {"radii", "angles", "include_real_axis_ramp"}, "plan")
    angles = args.angles if args.angles is not None else plan_doc.get("angles", 720)
    try:
        plan = SamplingPlan(
            radii=tuple(plan_doc.get("radii", (0.5, 0.9, 0.99, 0.999))),
            angles=angles,
            include_real_axis_ramp=bool(plan_doc.get("include_real_axis_ramp", True)),
        )
    except (DomainError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid sampling plan: {exc}") from exc

    tol_doc = doc.get("tolerances", {})
    _check_keys(tol_doc, {"bisection_tol", "equality_slack"}, "tolerances")
    bisection_tol = args.tol if args.tol is not None else tol_doc.get("bisection_tol", 1e-6)
    equality_slack = tol_doc.get("equality_slack", 1e-12)
    if not (bisection_tol > 0 and equality_slack >= 0):
        raise ConfigError("tolerances must be positive")

    k_max = args.k_max if args.k_max is not None else doc.get("k_max", 64)
    if int(k_max) != k_max or k_max < 1:
        raise ConfigError(f"k_max must be a positive integer, got {k_max!r}")

    return RunConfig(
        wright, cls, function, function2, int(k_max), plan, float(bisection_tol), float(equality_slack)
    )


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _emit(args, report: dict, csv_header: list[str], csv_rows: list[tuple], title: str) -> None:
    if args.format == "json":
        _write_output(rpt.to_json(report), args.out)
    elif args.format == "csv":
        _write_output(rpt.rows_to_csv(csv_header, csv_rows), args.out)
    else:
        _write_output(rpt.rows_to_text(csv_header, csv_rows, title), args.out)


def _plot_dir(args) -> Path | None:
    return Path(args.plot_dir) if getattr(args, "plot_dir", None) else None


# ---------------------------------------------------------------------------
# subcommands


def cmd_sigma(config: RunConfig, args) -> int:
    k_from = args.k_from if args.k_from is not None else 1
    k_to = args.k_to if args.k_to is not None else config.k_max
    rows = []
    for k in range(k_from, k_to + 1):
        ls = log_sigma_k(config.wright, k)
        try:
            value = sigma_k(config.wright, k)
        except GammaOverflowError:
            value = None
        rows.append({"k": k, "sigma": value, "log_sigma": ls})
    report = rpt.build_report("sigma", config.echo(), {"table": rows})
    csv_rows = [
        (r["k"], r["sigma"] if r["sigma"] is not None else "", r["log_sigma"]) for r in rows
    ]
    _emit(args, report, ["k", "sigma", "log_sigma"], csv_rows, "operator multipliers")
    plot_dir = _plot_dir(args)
    if plot_dir and rows:
        from . import plots

        plots.plot_sigma_table(rows, plot_dir / "sigma.png")
    return 0


def cmd_member(config: RunConfig, args) -> int:
    f = config.function if config.function is not None else MeroFunction.principal_part()
    margin = membership_margin(f, config.cls, config.wright)
    analytic = verify_membership_analytic(f, config.cls, config.wright, config.plan)
    ok = margin >= 0.0 and analytic.passed
    report = rpt.build_report(
        "member",
        config.echo(),
        {
            "margin": margin,
            "is_member": bool(margin >= 0.0),
            "analytic": analytic.to_dict(),
            "pass": bool(ok),
        },
    )
    csv_rows = [
        ("coefficient_margin", margin, margin >= 0.0),
        ("analytic_max_ratio", analytic.worst.observed, analytic.passed),
    ]
    _emit(args, report, ["check", "value", "pass"], csv_rows, "membership")
    return 0 if ok else 1


def cmd_extremal(config: RunConfig, args) -> int:
    k = args.k
    f = extremal_function(config.cls, config.wright, k)
    bound = coefficient_bound(config.cls, config.wright, k)
    report = rpt.build_report(
        "extremal",
        config.echo(),
        {"k": k, "coefficient": bound, "coeffs": list(f.coeffs)},
    )
    csv_rows = [(i + 1, c) for i, c in enumerate(f.coeffs)]
    _emit(args, report, ["k", "coefficient"], csv_rows, f"boundary function at k={k}")
    return 0


def cmd_bounds(config: RunConfig, args) -> int:
    radii = tuple(args.r) if args.r else config.plan.radii
    rows = []
    for r in radii:
        glo, ghi = growth_bounds(config.cls, config.wright, r)
        dlo, dhi = distortion_bounds(config.cls, config.wright, r)
        rows.append(
            {
                "r": float(r),
                "growth_lower": glo,
                "growth_upper": ghi,
                "distortion_lower": dlo,
                "distortion_upper": dhi,
            }
        )
    report = rpt.build_report("bounds", config.echo(), {"table": rows})
    csv_rows = [
        (
            row["r"],
            row["growth_lower"],
            row["growth_upper"],
            row["distortion_lower"],
            row["distortion_upper"],
        )
        for row in rows
    ]
    header = ["r", "growth_lower", "growth_upper", "distortion_lower", "distortion_upper"]
    _emit(args, report, header, csv_rows, "envelopes")
    plot_dir = _plot_dir(args)
    if plot_dir and rows:
        from . import plots

        plots.plot_envelopes(sorted(rows, key=lambda r: r["r"]), plot_dir / "bounds.png")
    return 0


def cmd_radii(config: RunConfig, args) -> int:
    delta = args.delta if args.delta is not None else 0.0
    kappa = args.kappa if args.kappa is not None else 0.0
    star = starlike_radius(config.cls, config.wright, delta, config.k_max)
    conv = convex_radius(config.cls, config.wright, kappa, config.k_max)
    payload = {
        "starlike": rpt.radius_result_dict(star),
        "convex": rpt.radius_result_dict(conv),
    }
    if config.function is not None:
        payload["numeric"] = {
            "starlike": numeric_radius(
                config.function, StarlikeCondition(delta), config.bisection_tol, config.plan.angles
            ),
            "convex": numeric_radius(
                config.function, ConvexCondition(kappa), config.bisection_tol, config.plan.angles
            ),
        }
    report = rpt.build_report("radii", config.echo(), payload)
    csv_rows = [("starlike", c.k, c.candidate, "") for c in star.per_k] + [
        ("convex", c.k, c.candidate, c.without_k_factor) for c in conv.per_k
    ]
    _emit(args, report, ["condition", "k", "candidate", "without_k_factor"], csv_rows, "radii")
    plot_dir = _plot_dir(args)
    if plot_dir:
        from . import plots

        plots.plot_radius_result(star, plot_dir / "radius_starlike.png")
        plots.plot_radius_result(conv, plot_dir / "radius_convex.png")
    return 0


def _margin_or_none(f: MeroFunction, config: RunConfig):
    if not f.nonnegative:
        return None
    return membership_margin(f, config.cls, config.wright)


def cmd_convolve(config: RunConfig, args) -> int:
    if config.function is None:
        raise ConfigError("convolve requires function.coeffs in the config")
    f = config.function
    mode = args.mode
    checks_pass = True
    payload: dict = {"mode": mode}

    if mode == "bounded":
        if config.function2 is None:
            raise ConfigError("bounded mode requires function2.coeffs (the multiplier)")
        try:
            g = BoundedMultiplier(config.function2)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        product, margin = bounded_multiplier_convolve(f, g, config.cls, config.wright)
        margin_f = membership_margin(f, config.cls, config.wright)
        checks_pass = margin >= margin_f
        payload.update(
            {
                "product_coeffs": list(product.coeffs),
                "margin_f": margin_f,
                "margin_product": margin,
                "margin_monotone": bool(checks_pass),
            }
        )
        csv_rows = [("margin_f", margin_f), ("margin_product", margin)]
        header = ["quantity", "value"]
    else:
        if config.function2 is None:
            raise ConfigError(f"{mode} mode requires function2.coeffs")
        try:
            g = MeroFunction(config.function2)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        if mode == "hadamard":
            product = hadamard(f, g)
            order = convolution_order(config.cls, config.wright, config.k_max)
        else:
            product = quadratic_combination(f, g)
            order = quadratic_mean_order(config.cls, config.wright, config.k_max)
        margin_f = _margin_or_none(f, config)
        margin_g = _margin_or_none(g, config)
        payload.update(
            {
                "product_coeffs": list(product.coeffs),
                "margin_f": margin_f,
                "margin_g": margin_g,
                "margin_product_at_base_order": _margin_or_none(product, config),
                "order": rpt.closure_order_dict(order),
            }
        )
        # When both inputs are members and the aggregate order is a usable
        # class order, the product must be a member at that order.
        if (
            margin_f is not None
            and margin_g is not None
            and margin_f >= 0.0
            and margin_g >= 0.0
            and order.aggregate_in_range
        ):
            target = ClassParams(config.cls.alpha, order.aggregate)
            product_margin = membership_margin(product, target, config.wright)
            payload["margin_product_at_aggregate"] = product_margin
            checks_pass = product_margin >= -1e-10
        csv_rows = [
            (e.k, e.value, e.denominator_positive, e.in_range) for e in order.per_k
        ]
        header = ["k", "order", "denominator_positive", "in_range"]
        plot_dir = _plot_dir(args)
        if plot_dir:
            from . import plots

            plots.plot_closure_order(order, plot_dir / f"closure_{mode}.png")

    payload["pass"] = bool(checks_pass)
    report = rpt.build_report("convolve", config.echo(), payload)
    _emit(args, report, header, csv_rows, f"convolve ({mode})")
    return 0 if checks_pass else 1


def cmd_verify(config: RunConfig, args) -> int:
    if config.function is not None:
        functions = [("configured", config.function)]
    else:
        rng = np.random.default_rng(_BUNDLE_SEED)
        functions = [
            ("principal_part", MeroFunction.principal_part()),
            ("extremal_k1", extremal_function(config.cls, config.wright, 1)),
            ("random_member", random_member(config.cls, config.wright, rng)),
        ]
    bundle = []
    all_ok = True
    for name, f in functions:
        margin = membership_margin(f, config.cls, config.wright)
        member = margin >= 0.0
        entry: dict = {"function": name, "coeffs": list(f.coeffs), "margin": margin}
        checks = []

        analytic = verify_membership_analytic(f, config.cls, config.wright, config.plan)
        checks.append((analytic, True))

        k_upto = max(len(f.coeffs), 1)
        growth_gated = member and growth_hypothesis_ok(config.cls, config.wright, k_upto)
        distortion_gated = member and distortion_hypothesis_ok(config.cls, config.wright, k_upto)
        checks.append(
            (
                verify_growth(f, config.cls, config.wright, config.plan, config.equality_slack),
                growth_gated,
            )
        )
        checks.append(
            (
                verify_distortion(
                    f, config.cls, config.wright, config.plan, config.equality_slack
                ),
                distortion_gated,
            )
        )

        if member:
            star = starlike_radius(config.cls, config.wright, 0.0, config.k_max)
            conv = convex_radius(config.cls, config.wright, 0.0, config.k_max)
            checks.append(
                (verify_radius(f, StarlikeCondition(0.0), star.radius, config.plan), True)
            )
            checks.append(
                (verify_radius(f, ConvexCondition(0.0), conv.radius, config.plan), True)
            )

        entry["checks"] = [
            {**report.to_dict(), "counted": counted} for report, counted in checks
        ]
        func_ok = member and all(r.passed for r, counted in checks if counted)
        entry["pass"] = bool(func_ok)
        all_ok = all_ok and func_ok
        bundle.append(entry)

    report = rpt.build_report("verify", config.echo(), {"bundle": bundle, "pass": bool(all_ok)})
    csv_rows = []
    for entry in bundle:
        csv_rows.append((entry["function"], "coefficient_margin", entry["margin"], entry["pass"]))
        for chk in entry["checks"]:
            csv_rows.append(
                (
                    entry["function"],
                    chk["check_name"],
                    chk["margin"] if chk["margin"] is not None else "",
                    chk["pass"],
                )
            )
    _emit(args, report, ["function", "check", "margin", "pass"], csv_rows, "verification bundle")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="merowright",
        description=(
            "Coefficient tests, envelopes, closure orders, and radii for "
            "meromorphic functions under a Wright-type convolution operator."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--alpha", type=float, help="class parameter alpha in (0,1); default 0.5")
    common.add_argument("--eta", type=float, help="class parameter eta in (0,1]; default 1.0")
    common.add_argument("--k-max", dest="k_max", type=int, help="table truncation (default 64)")
    common.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )
    common.add_argument("--out", help="write the report to this path instead of stdout")
    common.add_argument("--tol", type=float, help="bisection tolerance (default 1e-6)")
    common.add_argument("--angles", type=int, help="sampling angle count (default 720)")
    common.add_argument("--plot-dir", help="also render PNG figures into this directory")

    p = sub.add_parser("sigma", parents=[common], help="operator multiplier table")
    p.add_argument("--k-from", dest="k_from", type=int, help="first k (default 1)")
    p.add_argument("--k-to", dest="k_to", type=int, help="last k (default k-max)")

    sub.add_parser("member", parents=[common], help="membership margin + sampled analytic check")

    p = sub.add_parser("extremal", parents=[common], help="boundary witness function")
    p.add_argument("k", type=int, help="coefficient index")

    p = sub.add_parser("bounds", parents=[common], help="growth/distortion envelope table")
    p.add_argument("--r", type=float, action="append", help="circle radius (repeatable)")

    p = sub.add_parser("radii", parents=[common], help="starlikeness/convexity radii")
    p.add_argument("--delta", type=float, help="starlikeness order in [0,1); default 0")
    p.add_argument("--kappa", type=float, help="convexity order in [0,1); default 0")

    p = sub.add_parser("convolve", parents=[common], help="closure of termwise products")
    p.add_argument("mode", choices=("hadamard", "quadratic", "bounded"))

    sub.add_parser("verify", parents=[common], help="full certificate bundle")

    return parser


_COMMANDS = {
    "sigma": cmd_sigma,
    "member": cmd_member,
    "extremal": cmd_extremal,
    "bounds": cmd_bounds,
    "radii": cmd_radii,
    "convolve": cmd_convolve,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return 0 if code == 0 else 2
    try:
        config = build_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](config, args)
    except NotAMemberError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (
        ClassPreconditionError,
        DomainError,
        UnsupportedParametersError,
        DegenerateInputError,
        GammaOverflowError,
    ) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
