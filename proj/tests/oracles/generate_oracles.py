#!/usr/bin/env python3
# Copyright 2026 The thermolength Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates tests/unit/oracle_values.hpp.

Every value here comes from the fundamental relations alone, differentiated
and integrated at 40 digits with mpmath. Nothing is shared with the C++ code
beyond the model definitions, so the frozen numbers are an independent check.

    python3 tests/oracles/generate_oracles.py > tests/unit/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 40


class Gas:
    """Constant-c_v gas with p = RT/(v-b) - a/v^2."""

    def __init__(self, name, R, cv, a, b, T_ref, v_ref=1, s_ref=0):
        self.name, self.R, self.cv, self.a, self.b = name, mp.mpf(R), mp.mpf(cv), mp.mpf(a), mp.mpf(b)
        self.T_ref, self.v_ref, self.s_ref = mp.mpf(T_ref), mp.mpf(v_ref), mp.mpf(s_ref)

    def T_sv(self, s, v):
        return self.T_ref * mp.exp((s - self.s_ref) / self.cv) * ((v - self.b) / (self.v_ref - self.b)) ** (-self.R / self.cv)

    def u_sv(self, s, v):
        return self.cv * self.T_sv(s, v) - self.a / v

    def s_Tv(self, T, v):
        return self.s_ref + self.cv * mp.log(T / self.T_ref) + self.R * mp.log((v - self.b) / (self.v_ref - self.b))

    def s_uv(self, u, v):
        return self.s_Tv((u + self.a / v) / self.cv, v)

    def p(self, T, v):
        return self.R * T / (v - self.b) - self.a / v ** 2

    def energy_hessian(self, s, v):
        f = self.u_sv
        return (mp.diff(f, (s, v), (2, 0)), mp.diff(f, (s, v), (1, 1)), mp.diff(f, (s, v), (0, 2)))

    def entropy_form(self, u, v):
        f = self.s_uv
        return (-mp.diff(f, (u, v), (2, 0)), -mp.diff(f, (u, v), (1, 1)), -mp.diff(f, (u, v), (0, 2)))


IDEAL = Gas("ideal", 1, 1.5, 0, 0, 2)
QUASI = Gas("quasi", 1, 1.5, 0, mp.mpf("0.1"), 2)
VDW = Gas("vdw", mp.mpf(8) / 3, 1.5, 3, mp.mpf(1) / 3, 1)


def qf(h, d1, d2):
    return h[0] * d1 * d1 + 2 * h[1] * d1 * d2 + h[2] * d2 * d2


def fmt(x):
    return mp.nstr(mp.mpf(x), 17, min_fixed=-mp.inf, max_fixed=mp.inf, strip_zeros=False)


def metric_rows(gas, points):
    rows = []
    for T, v in points:
        T, v = mp.mpf(T), mp.mpf(v)
        s = gas.s_Tv(T, v)
        u = gas.cv * T - gas.a / v
        gu = gas.energy_hessian(s, v)
        gs = gas.entropy_form(u, v)
        rows.append([T, v, s, u, *gu, *gs])
    return rows


def line_length(hess, a, b):
    d1, d2 = b[0] - a[0], b[1] - a[1]
    return mp.quad(lambda t: mp.sqrt(qf(hess(a[0] + t * d1, a[1] + t * d2), d1, d2)), [0, 1])


def main():
    out = []
    emit = out.append
    emit("// Copyright 2026 The thermolength Authors")
    emit("//")
    emit('// Licensed under the Apache License, Version 2.0 (the "License");')
    emit("// you may not use this file except in compliance with the License.")
    emit("// You may obtain a copy of the License at")
    emit("//")
    emit("//     http://www.apache.org/licenses/LICENSE-2.0")
    emit("//")
    emit("// Unless required by applicable law or agreed to in writing, software")
    emit('// distributed under the License is distributed on an "AS IS" BASIS,')
    emit("// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.")
    emit("// See the License for the specific language governing permissions and")
    emit("// limitations under the License.")
    emit("")
    emit("// Generated by tests/oracles/generate_oracles.py (mpmath, 40 digits). Do not edit.")
    emit("#pragma once")
    emit("")
    emit("#include <array>")
    emit("")
    emit("namespace oracle {")
    emit("")
    emit("// T, v, s, u, energy Hessian (uss, usv, uvv), minus entropy Hessian (11, 12, 22).")
    emit("using MetricRow = std::array<double, 10>;")
    emit("")
    sets = {
        "kIdealMetric": (IDEAL, [(2, 1), (0.7, 3.5), (4.5, 0.6), (1.3, 2.2)]),
        "kQuasiMetric": (QUASI, [(2, 1), (0.9, 0.35), (3.7, 4.0), (1.6, 1.25)]),
        "kVdwMetric": (VDW, [(1.5, 1.0), (1.05, 0.9), (2.5, 0.6), (0.8, 4.0), (0.9, 0.5)]),
    }
    for name, (gas, pts) in sets.items():
        rows = metric_rows(gas, pts)
        emit(f"inline constexpr std::array<MetricRow, {len(rows)}> {name} = {{{{")
        for r in rows:
            emit("    {" + ", ".join(fmt(x) for x in r) + "},")
        emit("}};")
        emit("")

    # Spinodal of reduced van der Waals: 4 T v^3 = (3 v - 1)^2 with v > 1/3.
    emit("// Reduced van der Waals spinodal volumes {T, v_liquid, v_gas}.")
    temps = ["0.85", "0.9", "0.95", "0.99"]
    emit(f"inline constexpr std::array<std::array<double, 3>, {len(temps)}> kVdwSpinodal = {{{{")
    for T in temps:
        T = mp.mpf(T)
        roots = sorted(r.real for r in mp.polyroots([4 * T, -9, 6, -1], maxsteps=200, extraprec=200)
                       if abs(r.imag) < mp.mpf(10) ** -30 and r.real > mp.mpf(1) / 3)
        assert len(roots) == 2, roots
        emit("    {" + ", ".join(fmt(x) for x in [T, *roots]) + "},")
    emit("}};")
    emit("")

    vdw = VDW
    # Constant-s length on van der Waals, s fixed at (T=3, v=1), v from 0.8 to 1.5.
    s0 = vdw.s_Tv(mp.mpf(3), 1)
    L_const_s = mp.quad(lambda v: mp.sqrt(vdw.energy_hessian(s0, v)[2]), [mp.mpf("0.8"), mp.mpf("1.5")])
    emit(f"inline constexpr double kVdwConstSS = {fmt(s0)};")
    emit("// van der Waals constant-s length, v 0.8 -> 1.5.")
    emit(f"inline constexpr double kVdwConstSLength = {fmt(L_const_s)};")

    # Isotherm T=1.5, v 0.8 -> 3 in both reps, through the fundamental relations.
    T = mp.mpf("1.5")

    def iso_energy(v):
        s = vdw.s_Tv(T, v)
        ds = mp.diff(lambda w: vdw.s_Tv(T, w), v)
        return mp.sqrt(qf(vdw.energy_hessian(s, v), ds, 1))

    def iso_entropy(v):
        u = vdw.cv * T - vdw.a / v
        du = mp.diff(lambda w: vdw.cv * T - vdw.a / w, v)
        return mp.sqrt(qf(vdw.entropy_form(u, v), du, 1))

    emit("// van der Waals isotherm T=1.5, v 0.8 -> 3.")
    emit(f"inline constexpr double kVdwIsothermEnergy = {fmt(mp.quad(iso_energy, [mp.mpf('0.8'), 3]))};")
    emit(f"inline constexpr double kVdwIsothermEntropy = {fmt(mp.quad(iso_entropy, [mp.mpf('0.8'), 3]))};")

    # Isobar p=1.2, v 0.7 -> 2.5 in the energy rep.
    P = mp.mpf("1.2")

    def T_of_v(v):
        return (P + vdw.a / v ** 2) * (v - vdw.b) / vdw.R

    def isobar(v):
        s_of = lambda w: vdw.s_Tv(T_of_v(w), w)
        return mp.sqrt(qf(vdw.energy_hessian(s_of(v), v), mp.diff(s_of, v), 1))

    emit("// van der Waals isobar p=1.2, v 0.7 -> 2.5, energy metric.")
    emit(f"inline constexpr double kVdwIsobarLength = {fmt(mp.quad(isobar, [mp.mpf('0.7'), mp.mpf('2.5')]))};")

    # Straight coordinate segments.
    a = (mp.mpf(0), mp.mpf(1))
    b = (mp.mpf(1), mp.mpf(2))
    emit("// ideal energy-rep segment (s, v): (0, 1) -> (1, 2).")
    emit(f"inline constexpr double kIdealSegmentEnergy = {fmt(line_length(IDEAL.energy_hessian, a, b))};")
    ua = (vdw.cv * mp.mpf(2) - vdw.a / 1, mp.mpf(1))
    ub = (vdw.cv * mp.mpf(3) - vdw.a / 2, mp.mpf(2))
    emit("// van der Waals entropy-rep segment (u, v) between (T=2, v=1) and (T=3, v=2).")
    emit(f"inline constexpr std::array<double, 4> kVdwSegmentEntropyEnds = {{{fmt(ua[0])}, {fmt(ua[1])}, {fmt(ub[0])}, {fmt(ub[1])}}};")
    emit(f"inline constexpr double kVdwSegmentEntropy = {fmt(line_length(vdw.entropy_form, ua, ub))};")

    # Sound speeds at T=1.5, v=2 with molar mass 1.
    T, v = mp.mpf("1.5"), mp.mpf(2)
    dp_dv = mp.diff(lambda w: vdw.p(T, w), v)
    dp_dT = mp.diff(lambda t: vdw.p(t, v), T)
    cp = vdw.cv - T * dp_dT ** 2 / dp_dv
    nu_i = mp.sqrt(-v * v * dp_dv)
    emit("// van der Waals at T=1.5, v=2, molar mass 1: c_p, nu_i, nu_a.")
    emit(f"inline constexpr double kVdwSoundCp = {fmt(cp)};")
    emit(f"inline constexpr double kVdwSoundNuI = {fmt(nu_i)};")
    emit(f"inline constexpr double kVdwSoundNuA = {fmt(nu_i * mp.sqrt(cp / vdw.cv))};")
    emit("")
    emit("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
