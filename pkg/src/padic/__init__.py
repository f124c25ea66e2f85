"""Lazy p-adic integers as digit streams, with coalgebraic addition and multiplication."""
from .arithmetic import add, alpha_raw, mu_raw, mul, negate, tilde_A_step, tilde_M_step
from .coalgebra import (
    A_step,
    CoalgebraStep,
    M_step,
    NatPairState,
    check_homomorphism_square,
    phi,
    unfold,
)
from .digits import (
    PadicInt,
    Prime,
    carry_quot,
    digit_at,
    embed_int,
    embed_nat,
    residue,
    tail,
    truncate,
)
from .metric import DistanceBound, check_ultrametric, distance, valuation_bound

__version__ = "0.1.0"
