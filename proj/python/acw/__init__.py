"""Entropy, Fourier and Bohr-set tools on finite abelian groups."""

import json as _json

from ._acw import (
    AcwError,
    Dist,
    Group,
    bohr_set,
    convolve,
    dft,
    entropy,
    fibring_application_check,
    iterate_sum,
    kl_divergence,
    l1_distance,
    lspec,
    renyi,
    ruzsa_dist,
    spec,
    tau,
)
from . import _acw


def doubling_constant(group, A):
    return _acw.doubling_constant(group, [tuple(a) for a in A])


def minimize_tau(group, A, n_hi=0, max_steps=64):
    return _json.loads(_acw.minimize_tau(group, [list(a) for a in A], n_hi, max_steps))


def growth_certificate(p, N):
    return _json.loads(_acw.growth_certificate(p, N))


def weak_bogolyubov_global(group, A):
    return _json.loads(_acw.weak_bogolyubov_global(group, [list(a) for a in A]))


def freiman_cover(group, A, C=1e6):
    """Covering certificate (schema "acw-cert/1") as a dict."""
    return _json.loads(_acw.freiman_cover(group, [list(a) for a in A], C))


def verify_calculus(cases=50, seed=1, group_max=512):
    return _json.loads(_acw.verify_calculus(cases, seed, group_max))


def scenario_ap(N, length, step=1):
    return _json.loads(_acw.scenario_ap(N, length, step))


def scenario_binomial(n, d=1):
    return _json.loads(_acw.scenario_binomial(n, d))


__all__ = [
    "AcwError",
    "Dist",
    "Group",
    "bohr_set",
    "convolve",
    "dft",
    "doubling_constant",
    "entropy",
    "fibring_application_check",
    "freiman_cover",
    "growth_certificate",
    "iterate_sum",
    "kl_divergence",
    "l1_distance",
    "lspec",
    "minimize_tau",
    "renyi",
    "ruzsa_dist",
    "scenario_ap",
    "scenario_binomial",
    "spec",
    "tau",
    "verify_calculus",
    "weak_bogolyubov_global",
]
