"""Command-line front end: estimation runs, Monte Carlo batches, oracle
reports and the standalone index check. Emits trace.csv / mc_mean.csv /
summary.json for the plotting scripts.
"""

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np
import yaml

from . import oracle
from .errors import NugapError
from .estimator import (
    STATUS_INDEX_FAILED,
    EstimationConfig,
    estimate_nu_gap,
)
from .plants import builtin_plants, load_plant

_CFG_KEY_MAP = {
    "N": "n_samples",
    "M": "iterations",
    "N_acc": "n_acc",
}


def _estimation_config(raw, overrides):
    raw = dict(raw or {})
    kwargs = {}
    for key, value in raw.items():
        kwargs[_CFG_KEY_MAP.get(key, key)] = value
    for key, value in overrides.items():
        if value is not None:
            kwargs[key] = value
    return EstimationConfig(**kwargs)


def _load_run_config(path, args):
    with open(path) as fh:
        data = yaml.safe_load(fh) or {}
    if "plant_a" not in data or "plant_b" not in data:
        raise ValueError("config must name plant_a (nominal) and plant_b (plant)")
    nominal = load_plant(str(data["plant_a"]))
    plant = load_plant(str(data["plant_b"]))
    if nominal.sample_time != plant.sample_time:
        raise ValueError("plant sample times differ")
    overrides = {
        "seed": args.seed,
        "mode": args.mode,
        "sample_time": nominal.sample_time,
    }
    cfg = _estimation_config(data.get("estimation"), overrides)
    mc_runs = int(data.get("mc_runs", 1))
    if mc_runs < 1:
        raise ValueError("mc_runs must be >= 1")
    out_dir = Path(args.out or data.get("output_dir", "."))
    return nominal, plant, cfg, mc_runs, out_dir


def _write_trace_csv(path, traces):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["run", "iter", "estimate"])
        for run_index, trace in enumerate(traces):
            for it, value in enumerate(trace):
                writer.writerow([run_index, it, repr(float(value))])


def _write_mc_mean_csv(path, traces, iterations):
    padded = np.full((len(traces), iterations), 1.0)
    for i, trace in enumerate(traces):
        padded[i, : len(trace)] = trace
        # hard-stopped runs stay at the saturated estimate
    mean = padded.mean(axis=0)
    std = padded.std(axis=0)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iter", "mean_estimate", "std_estimate"])
        for it in range(iterations):
            writer.writerow([it, repr(float(mean[it])), repr(float(std[it]))])


def _oracle_block(nominal, plant):
    res = oracle.nu_gap(nominal, plant)
    return res.to_dict()


def _summary(result, nominal, plant, cfg):
    summary = result.to_dict()
    summary["nu_gap"] = 1.0 if result.status == STATUS_INDEX_FAILED else result.estimate
    summary["config"] = {
        "N": cfg.n_samples,
        "M": cfg.iterations,
        "N_acc": cfg.n_acc,
        "noise_variance": cfg.noise_variance,
        "sample_time": cfg.sample_time,
        "seed": cfg.seed,
        "mode": cfg.mode,
    }
    summary["oracle"] = _oracle_block(nominal, plant)
    return summary


def cmd_estimate(args):
    nominal, plant, cfg, _, out_dir = _load_run_config(args.config, args)
    out_dir.mkdir(parents=True, exist_ok=True)
    result = estimate_nu_gap(plant, nominal, cfg)
    _write_trace_csv(out_dir / "trace.csv", [result.trace])
    summary = _summary(result, nominal, plant, cfg)
    with open(out_dir / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2)
    print(f"estimate={summary['estimate']:.6f} status={result.status}")
    return 2 if result.status == STATUS_INDEX_FAILED else 0


def _mc_seed(seed, run_index):
    return np.random.SeedSequence([seed, run_index])


def cmd_mc(args):
    import dataclasses

    nominal, plant, cfg, mc_runs, out_dir = _load_run_config(args.config, args)
    out_dir.mkdir(parents=True, exist_ok=True)
    traces = []
    failures = 0
    for run_index in range(mc_runs):
        run_seed = int(_mc_seed(cfg.seed, run_index).generate_state(1)[0])
        run_cfg = dataclasses.replace(cfg, seed=run_seed)
        result = estimate_nu_gap(plant, nominal, run_cfg)
        if result.status == STATUS_INDEX_FAILED:
            failures += 1
        traces.append(result.trace)
    _write_trace_csv(out_dir / "trace.csv", traces)
    _write_mc_mean_csv(out_dir / "mc_mean.csv", traces, cfg.iterations)
    finals = [t[-1] for t in traces]
    summary = {
        "mc_runs": mc_runs,
        "index_failures": failures,
        "mean_final_estimate": float(np.mean(finals)),
        "std_final_estimate": float(np.std(finals)),
        "oracle": _oracle_block(nominal, plant),
    }
    with open(out_dir / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2)
    print(
        f"mc_runs={mc_runs} mean_final={summary['mean_final_estimate']:.6f} "
        f"index_failures={failures}"
    )
    return 2 if failures == mc_runs else 0


def cmd_oracle(args):
    nominal = load_plant(args.plant_a)
    plant = load_plant(args.plant_b)
    res = oracle.nu_gap(nominal, plant)
    print(f"chordal_sup = {res.chordal_sup:.6f}")
    print(f"omega_star  = {res.omega_star:.6f} rad/sample")
    print(f"wno(f1), wno(f2) = {res.wno_f1}, {res.wno_f2}")
    print(f"in_C        = {res.in_c}")
    print(f"nu_gap      = {res.nu_gap:.6f}")
    if args.controller is not None:
        ctrl = load_plant(args.controller)
        margin = oracle.stability_margin(nominal, ctrl)
        print(f"stability_margin b = {margin:.6f}")
        if margin > res.nu_gap:
            print("b > nu_gap: controller robustly stabilizes the plant")
        else:
            print("b <= nu_gap: no robustness guarantee")
    return 0


def cmd_index_check(args):
    nominal, plant, cfg, _, _ = _load_run_config(args.config, args)
    result = estimate_nu_gap(plant, nominal, cfg)
    idx = result.index_result
    if idx is None:
        print("index check did not run (estimation ended before N_acc)")
        return 0
    for key, value in idx.to_dict().items():
        print(f"{key} = {value}")
    return 0 if idx.in_c else 3


def cmd_plant(args):
    if args.action == "list":
        for name, tf in sorted(builtin_plants().items()):
            order = len(tf.denominator_coeffs) - 1
            print(
                f"{name}: order {order}, delay {tf.input_delay}, "
                f"Ts {tf.sample_time} s, stable {tf.is_stable()}"
            )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nugap",
        description="Data-driven nu-gap estimation for discrete-time SISO plants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_flags(p):
        p.add_argument("--config", required=True, help="YAML run config")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--mode", choices=["transient", "circular"], default=None)

    p_est = sub.add_parser("estimate", help="single estimation run")
    add_run_flags(p_est)
    p_est.set_defaults(func=cmd_estimate)

    p_mc = sub.add_parser("mc", help="Monte Carlo batch of estimation runs")
    add_run_flags(p_mc)
    p_mc.set_defaults(func=cmd_mc)

    p_or = sub.add_parser("oracle", help="exact reference computation")
    p_or.add_argument("plant_a", help="nominal plant (name or config path)")
    p_or.add_argument("plant_b", help="plant under test (name or config path)")
    p_or.add_argument("--controller", default=None)
    p_or.set_defaults(func=cmd_oracle)

    p_idx = sub.add_parser("index-check", help="data-driven index condition")
    add_run_flags(p_idx)
    p_idx.set_defaults(func=cmd_index_check)

    p_pl = sub.add_parser("plant", help="plant utilities")
    p_pl.add_argument("action", choices=["list"])
    p_pl.set_defaults(func=cmd_plant)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NugapError, OSError, ValueError, KeyError, yaml.YAMLError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
