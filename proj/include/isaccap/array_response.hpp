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

#ifndef ISACCAP_ARRAY_RESPONSE_HPP_
#define ISACCAP_ARRAY_RESPONSE_HPP_

#include <complex>
#include <span>
#include <vector>

namespace isaccap {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Uniform planar array with half-wavelength spacing.
struct UpaGeometry {
    int elements_x;
    int elements_y;
    double element_spacing_wavelengths = 0.5;

    int size() const { return elements_x * elements_y; }
};

UpaGeometry make_upa(int elements_x, int elements_y);

// a = a_elev (x) a_azim. Entry m_y * M_x + m_x has phase
//   2 pi (d/lambda) (m_y sin(az) sin(el) + m_x sin(az) cos(el)).
// This angle convention is kept as the signal model states it; only the
// algebraic identities built on it matter downstream.
CVector steering_vector(const UpaGeometry& upa, double azimuth_rad, double elevation_rad);

struct MrcPair {
    CVector receive_weights;     // a / ||a||
    CVector transmit_precoder;   // a / (sqrt(K) ||a||)
};

MrcPair mrc_pair(const UpaGeometry& upa, double azimuth_rad, double elevation_rad, int uavs_per_symbol);

// w^H (beta a a^H) f for beams steered at the target itself. Equals beta/sqrt(K).
cplx effective_channel_gain(const UpaGeometry& upa, double azimuth_rad, double elevation_rad,
                            double path_amplitude, int uavs_per_symbol);

// Leakage of a target at (target_az, target_el) into a beam pair steered at
// (beam_az, beam_el).
cplx cross_channel_gain(const UpaGeometry& upa, double beam_azimuth_rad, double beam_elevation_rad,
                        double target_azimuth_rad, double target_elevation_rad, double path_amplitude,
                        int uavs_per_symbol);

// x^H y
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm2(std::span<const cplx> x);

}  // namespace isaccap

#endif  // ISACCAP_ARRAY_RESPONSE_HPP_
