#include "pcns/discrete_ops.hpp"

#include <algorithm>
#include <cmath>

namespace pcns {

NormKind norm_kind_from_string(const std::string& s)
{
    if (s == "L2") return NormKind::L2;
    if (s == "H1") return NormKind::H1;
    if (s == "H2") return NormKind::H2;
    if (s == "H3") return NormKind::H3;
    if (s == "Linf") return NormKind::Linf;
    if (s == "L1") return NormKind::L1;
    if (s == "WeightedSqrtX") return NormKind::WeightedSqrtX;
    if (s == "WeightedOnePlusSqrtX") return NormKind::WeightedOnePlusSqrtX;
    throw ValidationError("unknown norm kind '" + s + "'");
}

const char* to_string(NormKind k)
{
    switch (k) {
    case NormKind::L2: return "L2";
    case NormKind::H1: return "H1";
    case NormKind::H2: return "H2";
    case NormKind::H3: return "H3";
    case NormKind::Linf: return "Linf";
    case NormKind::L1: return "L1";
    case NormKind::WeightedSqrtX: return "WeightedSqrtX";
    case NormKind::WeightedOnePlusSqrtX: return "WeightedOnePlusSqrtX";
    }
    return "?";
}

Field derivative(const Field& f, const Grid& g, int k)
{
    const std::size_t n = f.size();
    if (k != 1 && k != 2)
        throw ValidationError("derivative: unsupported order " + std::to_string(k));
    if (n < 5)
        throw ValidationError("derivative: need at least 5 nodes");
    const double h = g.dx;
    Field d(n);
    if (k == 1) {
        const double c = 0.5 / h;
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = (f[i + 1] - f[i - 1]) * c;
        d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * c;
        d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * c;
    } else {
        const double c = 1.0 / (h * h);
        for (std::size_t i = 1; i + 1 < n; ++i)
            d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * c;
        d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * c;
        d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * c;
    }
    return d;
}

Field sbp_derivative(const Field& f, const Grid& g)
{
    const std::size_t n = f.size();
    if (n < 3)
        throw ValidationError("sbp_derivative: need at least 3 nodes");
    const double h = g.dx;
    Field d(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[0] = (f[1] - f[0]) / h;
    d[n - 1] = (f[n - 1] - f[n - 2]) / h;
    return d;
}

double trapz(const Field& f, double h)
{
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        s += f[i];
    return s * h;
}

double trapz_product(const Field& a, const Field& b, double h)
{
    const std::size_t n = a.size();
    if (n < 2) return 0.0;
    double s = 0.5 * (a[0] * b[0] + a[n - 1] * b[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        s += a[i] * b[i];
    return s * h;
}

double norm(const Field& f, const Grid& g, NormKind kind)
{
    const double h = g.dx;
    switch (kind) {
    case NormKind::L2:
        return std::sqrt(trapz_product(f, f, h));
    case NormKind::H1:
    case NormKind::H2:
    case NormKind::H3: {
        const int kmax = kind == NormKind::H1 ? 1 : kind == NormKind::H2 ? 2 : 3;
        double acc = trapz_product(f, f, h);
        Field d = f;
        for (int j = 1; j <= kmax; ++j) {
            d = derivative(d, g, 1);
            acc += trapz_product(d, d, h);
        }
        return std::sqrt(acc);
    }
    case NormKind::Linf: {
        double m = 0.0;
        for (double v : f) m = std::max(m, std::abs(v));
        return m;
    }
    case NormKind::L1: {
        Field a(f.size());
        std::transform(f.begin(), f.end(), a.begin(), [](double v) { return std::abs(v); });
        return trapz(a, h);
    }
    case NormKind::WeightedSqrtX:
    case NormKind::WeightedOnePlusSqrtX: {
        Field a(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double x = g.x[i];
            const double w = kind == NormKind::WeightedSqrtX ? x : (1.0 + std::sqrt(x)) * (1.0 + std::sqrt(x));
            a[i] = w * f[i] * f[i];
        }
        return std::sqrt(trapz(a, h));
    }
    }
    return 0.0;
}

double trace0(const Field& f, const Grid& g, int k)
{
    if (f.size() < 5)
        throw ValidationError("trace0: need at least 5 nodes");
    const double h = g.dx;
    switch (k) {
    case 0: return f[0];
    case 1: return (-11.0 * f[0] + 18.0 * f[1] - 9.0 * f[2] + 2.0 * f[3]) / (6.0 * h);
    case 2: return (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / (h * h);
    default: throw ValidationError("trace0: unsupported order " + std::to_string(k));
    }
}

namespace {

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

double end_slope(double d0, double d1)
{
    double m = 0.5 * (3.0 * d0 - d1);
    if (sgn(m) != sgn(d0))
        m = 0.0;
    else if (sgn(d0) != sgn(d1) && std::abs(m) > 3.0 * std::abs(d0))
        m = 3.0 * d0;
    return m;
}

} // namespace

Tabulated::Tabulated(Field values, double h, double f_inf) : f_(std::move(values)), h_(h), f_inf_(f_inf)
{
    const std::size_t n = f_.size();
    if (n < 3 || !(h > 0.0))
        throw ValidationError("Tabulated: need at least 3 samples and positive spacing");
    Field delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k)
        delta[k] = (f_[k + 1] - f_[k]) / h;
    d_.assign(n, 0.0);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double a = delta[k - 1], b = delta[k];
        if (a * b > 0.0)
            d_[k] = 2.0 / (1.0 / a + 1.0 / b);
    }
    d_[0] = end_slope(delta[0], delta[1]);
    d_[n - 1] = end_slope(delta[n - 2], delta[n - 3]);
}

double Tabulated::operator()(double x) const
{
    const std::size_t n = f_.size();
    const double L = length();
    if (x > L) return f_inf_;
    if (x <= 0.0) return f_[0];
    const double s = x / h_;
    // Nodes reproduce the samples exactly.
    const double r = std::nearbyint(s);
    if (std::abs(s - r) <= 1e-12 * std::max(1.0, s) && r < static_cast<double>(n))
        return f_[static_cast<std::size_t>(r)];
    std::size_t k = static_cast<std::size_t>(s);
    if (k >= n - 1) k = n - 2;
    const double t = (x - static_cast<double>(k) * h_) / h_;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * f_[k] + h10 * h_ * d_[k] + h01 * f_[k + 1] + h11 * h_ * d_[k + 1];
}

Field shift_sample(const Tabulated& f0, double y, const Grid& g)
{
    if (!(y >= 0.0))
        throw ValidationError("shift_sample: negative offset");
    Field out(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        out[i] = f0(g.x[i] + y);
    return out;
}

Field tail_integral(const Field& f, const Grid& g)
{
    const std::size_t n = f.size();
    Field T(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;)
        T[i] = T[i + 1] - 0.5 * g.dx * (f[i] + f[i + 1]);
    return T;
}

Field cumulative_trapz(const Field& f, double h, double c0)
{
    Field c(f.size(), c0);
    for (std::size_t k = 1; k < f.size(); ++k)
        c[k] = c[k - 1] + 0.5 * h * (f[k - 1] + f[k]);
    return c;
}

} // namespace pcns
