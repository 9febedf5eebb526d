/*
   Copyright 2026 The isaccap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "isaccap/array_response.hpp"

#include <cmath>
#include <stdexcept>

#include "isaccap/units.hpp"

namespace isaccap {

namespace {

CVector phase_ramp(int count, double phase_step) {
    CVector v(static_cast<std::size_t>(count));
    const double scale = 1.0 / std::sqrt(static_cast<double>(count));
    for (int m = 0; m < count; ++m) {
        v[static_cast<std::size_t>(m)] = std::polar(scale, phase_step * m);
    }
    return v;
}

// wr^H H f with H = beta a a^H
cplx bilinear_gain(const CVector& w, const CVector& a, const CVector& f, double beta) {
    return beta * inner(w, a) * inner(a, f);
}

}  // namespace

UpaGeometry make_upa(int elements_x, int elements_y) {
    if (elements_x < 1 || elements_y < 1) {
        throw std::invalid_argument("UPA dimensions must be >= 1");
    }
    return UpaGeometry{elements_x, elements_y};
}

CVector steering_vector(const UpaGeometry& upa, double azimuth_rad, double elevation_rad) {
    const double k = 2.0 * kPi * upa.element_spacing_wavelengths;
    const CVector elev = phase_ramp(upa.elements_y, k * std::sin(azimuth_rad) * std::sin(elevation_rad));
    const CVector azim = phase_ramp(upa.elements_x, k * std::sin(azimuth_rad) * std::cos(elevation_rad));
    CVector a;
    a.reserve(static_cast<std::size_t>(upa.size()));
    for (const cplx& e : elev) {
        for (const cplx& z : azim) a.push_back(e * z);
    }
    return a;
}

MrcPair mrc_pair(const UpaGeometry& upa, double azimuth_rad, double elevation_rad, int uavs_per_symbol) {
    if (uavs_per_symbol < 1) throw std::invalid_argument("uavs_per_symbol must be >= 1");
    CVector a = steering_vector(upa, azimuth_rad, elevation_rad);
    const double n = norm2(a);
    MrcPair pair{a, a};
    const double precoder_scale = 1.0 / (std::sqrt(static_cast<double>(uavs_per_symbol)) * n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        pair.receive_weights[i] /= n;
        pair.transmit_precoder[i] *= precoder_scale;
    }
    return pair;
}

cplx effective_channel_gain(const UpaGeometry& upa, double azimuth_rad, double elevation_rad,
                            double path_amplitude, int uavs_per_symbol) {
    return cross_channel_gain(upa, azimuth_rad, elevation_rad, azimuth_rad, elevation_rad,
                              path_amplitude, uavs_per_symbol);
}

cplx cross_channel_gain(const UpaGeometry& upa, double beam_azimuth_rad, double beam_elevation_rad,
                        double target_azimuth_rad, double target_elevation_rad, double path_amplitude,
                        int uavs_per_symbol) {
    const MrcPair beam = mrc_pair(upa, beam_azimuth_rad, beam_elevation_rad, uavs_per_symbol);
    const CVector a = steering_vector(upa, target_azimuth_rad, target_elevation_rad);
    return bilinear_gain(beam.receive_weights, a, beam.transmit_precoder, path_amplitude);
}

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner: size mismatch");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double norm2(std::span<const cplx> x) {
    double acc = 0.0;
    for (const cplx& v : x) acc += std::norm(v);
    return std::sqrt(acc);
}

}  // namespace isaccap
