#pragma once

#include <Eigen/Dense>

#include "gaussinterp/interp1d.hpp"
#include "gaussinterp/nodes.hpp"
#include "mp.hpp"

namespace gaussinterp::detail {

struct InterpolantState {
    NodeWindow window;
    double lambda;
    InterpolantSource source;
    Eigen::VectorXd data;
    MpVector mp_coeffs;
    Eigen::VectorXd coeffs;  // rounded view of mp_coeffs
};

}  // namespace gaussinterp::detail
