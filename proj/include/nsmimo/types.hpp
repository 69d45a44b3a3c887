#pragma once

/**
 * @file types.hpp
 * @brief Core domain types shared across the reconstruction toolkit.
 */

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nsmimo {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

/// Invalid system or experiment configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input that makes an operation meaningless (e.g. all-zero image).
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Normal equations numerically rank deficient (collapsed detections).
struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Metric undefined for the given operands.
struct UndefinedMetricError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed external input; carries the 1-based line number when known.
struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

/// Well-formed external input violating a domain invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// System model
// ---------------------------------------------------------------------------

/// Array/OFDM/carrier constants. Noise variance is fixed to 1, so SNR enters
/// only through the transmit powers.
struct SystemConfig {
    int M = 128;  ///< ULA element count, divisible by S
    int N = 128;  ///< OFDM subcarrier count
    int S = 4;    ///< subarray count
    double d_over_lambda = 0.5;
    double delta_f = 15e3;
    double f_ul = 2.58e9;
    double f_dl = 2.64e9;
    double P_ul = 1.0;  ///< linear uplink power (unit noise variance)
    double P_dl = 1.0;  ///< linear downlink power

    void validate() const {
        if (M < 1 || N < 1 || S < 1) throw ConfigError("M, N, S must be positive");
        if (M % S != 0) throw ConfigError("M must be divisible by S");
        if (delta_f <= 0.0) throw ConfigError("delta_f must be positive");
        if (P_ul <= 0.0 || P_dl <= 0.0) throw ConfigError("transmit powers must be positive");
    }
};

/// One propagation path. theta/gamma are the normalized angle and delay in
/// [0,1); alpha is the effective uplink gain, g_dl the downlink gain; the
/// visibility region covers subarrays s_start..s_end (1-based, inclusive).
struct PathParams {
    double theta = 0.0;
    double gamma = 0.0;
    cd alpha{0.0, 0.0};
    cd g_dl{0.0, 0.0};
    int s_start = 1;
    int s_end = 1;

    int span() const { return s_end - s_start + 1; }
};

struct Scenario {
    SystemConfig config;
    std::vector<PathParams> paths;
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

enum class GridDomain { antenna_subcarrier, angular_temporal };

/// Dense complex grid with a domain tag. Channels are stored N x M
/// (subcarrier rows, antenna columns); pilot observations M x N.
struct ComplexGrid {
    GridDomain domain = GridDomain::antenna_subcarrier;
    CMat values;

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
};

// ---------------------------------------------------------------------------
// Imaging / detection
// ---------------------------------------------------------------------------

struct ImageConfig {
    int gamma_a = 16;  ///< angular oversampling rate
    int gamma_t = 16;  ///< temporal oversampling rate
    double eta = 255.0;
    static constexpr int grid_size = 938;  ///< network coordinate extent

    void validate() const {
        if (gamma_a < 1 || gamma_t < 1) throw ConfigError("oversampling rates must be >= 1");
        if (eta <= 0.0) throw ConfigError("eta must be positive");
    }
};

/// Normalized magnitude image, values in [0, eta]; row r maps to angle
/// r / (gamma_a*M), column c to delay c / (gamma_t*N).
struct SpectralImage {
    RMat mag;
    int M = 0;
    int N = 0;
    int S = 1;
    double eta = 255.0;
};

/// Training label box in the 938x938 network frame.
struct BoxLabel {
    int class_id = 0;
    int x_min = 0, y_min = 0, x_max = 0, y_max = 0;
};

struct Detection {
    double confidence = 0.0;
    int x_min = 0, y_min = 0, x_max = 0, y_max = 0;
};

struct CoarseEstimate {
    double theta_t = 0.0;  ///< box-center angle estimate
    double gamma_t = 0.0;  ///< box-center delay estimate
    int S_l = 1;           ///< estimated visibility size (subarray count)
};

struct DetectorConfig {
    double tau_det = 6.0;                     ///< detection threshold, multiple of the median floor
    double kappa = 10.0 / std::log(5.0);      ///< confidence scale: 10x floor -> ~0.8
    int l_max = 16;
    double min_confidence = 0.5;              ///< fake-path cut
};

// ---------------------------------------------------------------------------
// Visibility / refinement
// ---------------------------------------------------------------------------

struct VisibilityEstimate {
    int s_start = 1;
    int s_end = 1;

    int span() const { return s_end - s_start + 1; }
};

struct RefinerConfig {
    int rounds = 3;                 ///< cyclic refinement rounds R_c
    int newton_steps_per_visit = 1;
    bool improvement_only = true;   ///< reject steps that do not improve the objective
    double fd_check_tol = 1e-4;     ///< tolerance used by derivative validation
};

/// Per-path estimate carried through the pipeline. The pre-refinement values
/// are retained alongside the refined ones.
struct PathEstimate {
    double theta = 0.0;
    double gamma = 0.0;
    cd alpha{0.0, 0.0};
    VisibilityEstimate phi;
    double theta_coarse = 0.0;
    double gamma_coarse = 0.0;
    cd alpha_coarse{0.0, 0.0};
};

struct FeedbackPayload {
    std::vector<cd> gains;  ///< estimated downlink gains, one per path
};

// ---------------------------------------------------------------------------
// Baselines
// ---------------------------------------------------------------------------

struct NompConfig {
    int gamma_a = 4;
    int gamma_t = 4;
    int max_paths = 16;
    /// Stop when the grid maximum falls below this multiple of the expected
    /// noise correlation M*N; <= 0 derives it from false_alarm_target.
    double stop_threshold = 0.0;
    double false_alarm_target = 0.01;
    int newton_rounds = 3;

    double effective_stop_threshold(int M, int N) const {
        if (stop_threshold > 0.0) return stop_threshold;
        return std::log(static_cast<double>(M) * N / false_alarm_target);
    }
};

inline double snr_db_to_power(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

}  // namespace nsmimo
