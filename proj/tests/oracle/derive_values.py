#!/usr/bin/env python3
"""High-precision oracle for the frozen expected values used in the C++ tests.

Run manually; paste the printed constants into the test sources. Keeps the
oracle independent of the C++ implementation.
"""
from mpmath import mp, mpf, exp, log

mp.dps = 50


def softmax_weighted(vals):
    exps = [exp(mpf(v)) for v in vals]
    z = sum(exps)
    return sum(e / z * mpf(v) for e, v in zip(exps, vals))


def bce(logit, label):
    x = mpf(logit)
    s = 1 / (1 + exp(-x))
    return -(mpf(label) * log(s) + (1 - mpf(label)) * log(1 - s))


def advantages(vals):
    n = len(vals)
    m = sum(mpf(v) for v in vals) / n
    var = sum((mpf(v) - m) ** 2 for v in vals) / n
    sd = var**mpf("0.5")
    return [(mpf(v) - m) / sd for v in vals]


def clip(x, lo, hi):
    return min(max(x, lo), hi)


def grpo(ratio, adv, eps, kl, beta):
    r, a = mpf(ratio), mpf(adv)
    return min(r * a, clip(r, 1 - mpf(eps), 1 + mpf(eps)) * a) - mpf(beta) * mpf(kl)


def show(name, v):
    print(f"{name:40s} {mp.nstr(v, 20)}")


show("aggregate(1,0,0) = e/(e+2)", softmax_weighted([1, 0, 0]))
show("aggregate(0.5,0.5,0.5)", softmax_weighted([mpf('0.5')] * 3))
show("importance 4/8", mpf(4) / 8)
show("accuracy(0,1,w=2) = 0.5*(0+2*1)", mpf('0.5') * (0 + 2 * 1))
show("trajectory(1,0.5,1.5)", 1 + mpf('1.5') * mpf('0.5'))
show("trajectory(0,1.0,1.5)", 0 + mpf('1.5') * 1)
show("ranking([.8,.6,.7],.9,1)", (mpf('0.8') + mpf('0.6') + mpf('0.7')) / 3 + mpf('0.9'))
show("rl_reward(1,0.8,0.5)", mpf('0.5') * 1 + mpf('0.5') * mpf('0.8'))
show("adv [1,1,0,0]", advantages([1, 1, 0, 0]))
show("adv [1,0]", advantages([1, 0]))
show("grpo(2,1,0.2,0,0.001)", grpo(2, 1, '0.2', 0, '0.001'))
show("grpo(0.5,-1,0.2,0,0.001)", grpo('0.5', -1, '0.2', 0, '0.001'))
show("bce(0,1) = ln 2", bce(0, 1))
show("bce(50,1)", bce(50, 1))
show("bce(-50,1)", bce(-50, 1))
show("total: 3 steps logit0 label1 + traj, l=1", bce(0, 1) + bce(0, 1))
show("2*ln2", 2 * log(2))
