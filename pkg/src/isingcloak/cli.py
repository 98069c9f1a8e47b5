"""Command-line workflow driver with JSON persistence.

Subcommands: ``gen`` (benchmark instances), ``encrypt`` (scheme I, II
or III), ``solve`` (exact oracle or the QAOA simulator), ``decrypt``,
``verify`` (recomputes the true optimum and asserts recovery),
``stats`` (attack complexity and AR/RAR) and ``qaoa-sim``.

Every command is deterministic given ``--seed``.  Each written file
gets a ``<file>.manifest.json`` sidecar recording the command, the
SHA-256 of every input, the seed and the package version, so runs can
be replayed byte for byte.  Keys are never written into the same file
as an encrypted problem.  Errors are emitted as one-line JSON on
stderr with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .benchmarks import FAMILIES, generate
from .core import (
    OutcomeDistribution,
    distribution_from_dict,
    distribution_to_dict,
    dumps,
    ising_from_dict,
    ising_to_dict,
)
from .oracle import argmin_distribution, ar, brute_force, rar
from .qaoa import optimize, sample, simulate
from .scheme1 import attack_complexity1, decrypt1, encrypt1, gen_key1, key1_from_dict, key1_to_dict
from .scheme2 import attack_complexity2, decrypt2, encrypt2, key2_from_dict, key2_to_dict
from .scheme3 import decrypt3, encrypt3, key3_from_dict, key3_to_dict
from .util import as_rng


class VerificationError(RuntimeError):
    pass


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_json(path: str, payload: dict, command: str, inputs: list, seed) -> None:
    Path(path).write_text(dumps(payload), encoding="utf-8")
    manifest = {
        "command": command,
        "inputs": {p: _sha256(p) for p in inputs},
        "seed": seed,
        "version": __version__,
    }
    Path(path + ".manifest.json").write_text(dumps(manifest), encoding="utf-8")


def _load_key(path: str):
    data = _read_json(path)
    scheme = data.get("scheme")
    if scheme == "I":
        return key1_from_dict(data)
    if scheme == "II":
        return key2_from_dict(data)
    if scheme == "III":
        return key3_from_dict(data)
    raise ValueError(f"key file {path} has unknown scheme {scheme!r}")


def _decrypt_any(dist: OutcomeDistribution, key) -> OutcomeDistribution:
    from .scheme1 import KeyI
    from .scheme2 import KeyII

    if isinstance(key, KeyI):
        return decrypt1(dist, key)
    if isinstance(key, KeyII):
        return decrypt2(dist, key)
    return decrypt3(dist, key)


def cmd_gen(args) -> int:
    model = generate(args.family, args.n, as_rng(args.seed))
    _write_json(args.out, ising_to_dict(model), "gen", [], args.seed)
    return 0


def cmd_encrypt(args) -> int:
    model = ising_from_dict(_read_json(args.problem))
    rng = as_rng(args.seed)
    if args.scheme == "I":
        key = gen_key1(model.n, rng)
        if args.tau is not None:
            key = replace(key, tau=args.tau)
        encrypted = encrypt1(model, key)
        key = replace(key, offset=model.offset)
        key_payload = key1_to_dict(key)
    elif args.scheme == "II":
        encrypted, key = encrypt2(
            model,
            args.m,
            rng,
            kmax_out=args.kmax_out,
            kmax_in=args.kmax_in,
            bins=args.bins,
            mode=args.roulette,
        )
        key_payload = key2_to_dict(key)
    else:
        encrypted, key = encrypt3(
            model, rng, d_star=args.d_star, bins=args.bins, mode=args.roulette
        )
        key_payload = key3_to_dict(key)
    _write_json(args.out, ising_to_dict(encrypted), "encrypt", [args.problem], args.seed)
    _write_json(args.key_out, key_payload, "encrypt", [args.problem], args.seed)
    return 0


def cmd_solve(args) -> int:
    model = ising_from_dict(_read_json(args.problem))
    if args.method == "brute":
        dist = argmin_distribution(brute_force(model))
    else:
        rng = as_rng(args.seed)
        params, _ = optimize(model, args.layers, max_iters=args.iters, rng=rng)
        dist = sample(simulate(model, params), args.shots, rng)
    _write_json(args.out, distribution_to_dict(dist), "solve", [args.problem], args.seed)
    return 0


def cmd_decrypt(args) -> int:
    dist = distribution_from_dict(_read_json(args.dist))
    key = _load_key(args.key)
    decoded = _decrypt_any(dist, key)
    _write_json(args.out, distribution_to_dict(decoded), "decrypt", [args.dist, args.key], None)
    return 0


def cmd_verify(args) -> int:
    model = ising_from_dict(_read_json(args.problem))
    dist = distribution_from_dict(_read_json(args.dist))
    key = _load_key(args.key)
    decoded = _decrypt_any(dist, key)
    truth = brute_force(model).argmin_set
    if decoded.support != truth:
        raise VerificationError(
            f"decoded support {sorted(decoded.support)} does not match the "
            f"oracle argmin set {sorted(truth)}"
        )
    print(dumps({"verified": True, "argmin": sorted(truth)}), end="")
    return 0


def cmd_stats(args) -> int:
    key = _load_key(args.key)
    from .scheme1 import KeyI

    if isinstance(key, KeyI):
        scheme, n, m = "I", key.n, 0
        complexity = attack_complexity1(key.n)
    else:
        scheme, n, m = ("II" if not hasattr(key, "d_star") else "III"), key.n, key.m
        complexity = attack_complexity2(key.n, key.m)
    payload = {"scheme": scheme, "n": n, "m": m, "attack_complexity_log2": complexity}
    if args.problem and args.dist:
        model = ising_from_dict(_read_json(args.problem))
        dist = distribution_from_dict(_read_json(args.dist))
        gmin = brute_force(model).global_min
        payload["global_min"] = gmin
        payload["ar"] = ar(dist, model, gmin)
        payload["rar"] = rar(dist, model, gmin, k=args.k)
    print(dumps(payload), end="")
    return 0


def cmd_qaoa_sim(args) -> int:
    model = ising_from_dict(_read_json(args.problem))
    rng = as_rng(args.seed)
    params, trace = optimize(model, args.layers, max_iters=args.iters, rng=rng)
    dist = sample(simulate(model, params), args.shots, rng)
    if args.out:
        _write_json(args.out, distribution_to_dict(dist), "qaoa-sim", [args.problem], args.seed)
    print(
        dumps(
            {
                "layers": args.layers,
                "gammas": list(params.gammas),
                "betas": list(params.betas),
                "best_expectation": trace[-1],
                "evaluations": len(trace),
            }
        ),
        end="",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isingcloak",
        description="Obfuscate Ising problems for untrusted solvers and decode the results.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a benchmark problem")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encrypt", help="encrypt a problem under scheme I, II or III")
    p.add_argument("--problem", required=True)
    p.add_argument("--scheme", required=True, choices=("I", "II", "III"))
    p.add_argument("--out", required=True, help="encrypted problem (never contains the key)")
    p.add_argument("--key-out", required=True, dest="key_out")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--m", type=int, default=1, help="decoy count (scheme II)")
    p.add_argument("--kmax-out", type=int, default=1, dest="kmax_out")
    p.add_argument("--kmax-in", type=int, default=1, dest="kmax_in")
    p.add_argument("--bins", type=int, default=10)
    p.add_argument("--roulette", choices=("preserve", "inverse"), default="inverse")
    p.add_argument("--d-star", type=int, default=None, dest="d_star", help="target degree (scheme III)")
    p.add_argument("--tau", type=float, default=None, help="fixed stretch factor (scheme I)")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("solve", help="solve a problem exactly or with the QAOA simulator")
    p.add_argument("--problem", required=True)
    p.add_argument("--method", required=True, choices=("brute", "qaoa"))
    p.add_argument("--out", required=True)
    p.add_argument("--layers", type=int, default=1)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decrypt", help="decode a measured distribution with a key")
    p.add_argument("--dist", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("verify", help="assert that decoding recovers the true optimum")
    p.add_argument("--problem", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--dist", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="attack complexity and solution-quality metrics")
    p.add_argument("--key", required=True)
    p.add_argument("--problem", default=None)
    p.add_argument("--dist", default=None, help="decoded (primary-space) distribution")
    p.add_argument("--k", type=int, default=5)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("qaoa-sim", help="optimize and sample the QAOA simulator")
    p.add_argument("--problem", required=True)
    p.add_argument("--layers", type=int, default=1)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_qaoa_sim)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"type": type(exc).__name__, "error": str(exc)}) + "\n")
        return 1


def qaoa_sim_main(argv=None) -> int:
    """Entry point exposing the simulator directly as ``qaoa-sim``."""
    argv = sys.argv[1:] if argv is None else list(argv)
    return main(["qaoa-sim"] + argv)
