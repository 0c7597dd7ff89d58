#ifndef GHOSTSIM_CORRELATOR_HPP
#define GHOSTSIM_CORRELATOR_HPP

#include <string>
#include <vector>

#include "ghostsim/detection.hpp"
#include "ghostsim/lattice.hpp"

namespace ghostsim {

enum class CorrelatorMode {
    FfFixedX1,         // G(x2) at a fixed test pixel, f-f reference
    FfSpatialAverage,  // G_SA(x) = sum_{x1} G(x1, x-x1) via cyclic convolution
    TelescopePixelX1,  // G(x2) at a fixed test pixel, telescope reference
    TelescopeBucket,   // G(x2) against the bucket signal of the test arm
};

std::string to_string(CorrelatorMode mode);
CorrelatorMode correlator_mode_from_string(const std::string& s);

/// Real-valued correlation map over the transverse lattice.
struct CorrelationMap {
    int nx = 0;
    int ny = 0;
    double dx = 0.0;
    double dy = 0.0;
    /// true: dc/origin at bin 0 (f-f detector and kernel maps);
    /// false: origin at bin nx/2 (telescope image maps, mask order).
    bool frequency_order = true;
    std::vector<double> g;

    double max() const;
};

/// Rescale so max(map) == 1 (throws if max <= 0).
CorrelationMap max_rescaled(const CorrelationMap& map);

/// Streaming estimator of the intensity-fluctuation correlation
/// G = <I1 I2> - <I1><I2> in one of the four measurement modes. Running
/// sums use compensated (Kahan) summation.
class CorrelationAccumulator {
public:
    CorrelationAccumulator(CorrelatorMode mode, const LatticeSpec& spec, int x1_index = 0);

    CorrelatorMode mode() const { return mode_; }
    long shots() const { return n_; }
    const LatticeSpec& spec() const { return spec_; }

    /// Feed one shot's pair of frames (test arm, reference arm).
    void accumulate(const IntensityFrame& i1, const IntensityFrame& i2);

    /// Fold another accumulator's sums into this one. Order-independent up
    /// to compensated-summation rounding.
    void merge(const CorrelationAccumulator& other);

    /// G per the mode's coordinate; requires n >= 2.
    CorrelationMap finalize() const;

    // Self-describing binary checkpoint so long runs can resume.
    void save(const std::string& path) const;
    static CorrelationAccumulator load(const std::string& path);

private:
    struct KahanVec {
        std::vector<double> sum, comp;
        explicit KahanVec(std::size_t n = 0) : sum(n, 0.0), comp(n, 0.0) {}
        void add(std::size_t i, double v)
        {
            const double y = v - comp[i];
            const double t = sum[i] + y;
            comp[i] = (t - sum[i]) - y;
            sum[i] = t;
        }
    };

    CorrelatorMode mode_;
    LatticeSpec spec_;
    int x1_index_;
    KahanVec s12_;  // mode-shaped joint sum
    KahanVec s1_;   // marginal of arm 1 (scalar for fixed/bucket modes, frame for SA)
    KahanVec s2_;   // marginal of arm 2 (full frame)
    long n_ = 0;
};

/// Cyclic convolution c(x) = sum_{x1} a(x1) b(x - x1) over the transverse
/// lattice, computed with fast transforms.
std::vector<double> cyclic_convolution(const std::vector<double>& a, const std::vector<double>& b,
                                       int nx, int ny);

}  // namespace ghostsim

#endif
