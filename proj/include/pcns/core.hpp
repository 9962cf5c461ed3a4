#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcns {

using Field = std::vector<double>;

// Base for every error raised by the library. Context (time, field name)
// can be prepended while the exception propagates.
class Error : public std::exception {
public:
    explicit Error(std::string msg) : msg_(std::move(msg)) {}
    const char* what() const noexcept override { return msg_.c_str(); }
    void add_context(const std::string& ctx) { msg_ = ctx + ": " + msg_; }
    virtual const char* kind() const noexcept { return "Error"; }

private:
    std::string msg_;
};

#define PCNS_ERROR(Name)                                              \
    class Name : public Error {                                       \
    public:                                                           \
        using Error::Error;                                           \
        const char* kind() const noexcept override { return #Name; } \
    }

PCNS_ERROR(ValidationError);
PCNS_ERROR(HypothesisViolated);
PCNS_ERROR(NewtonDiverged);
PCNS_ERROR(MaximumPrincipleViolated);
PCNS_ERROR(DenominatorTooSmall);
PCNS_ERROR(PicardStalled);
PCNS_ERROR(SolverError);
PCNS_ERROR(ConfigError);

#undef PCNS_ERROR

double derive_speed(double u_minus, double u_plus, double v_plus);

struct PhysicalParams {
    double mu = 1.0;
    double v_plus = 2.0;
    double u_minus = 1.0;
    double u_plus = 0.0;
    double s = 1.0;
    double p_minus = 1.0;

    // Validates and fills the derived constants.
    static PhysicalParams make(double mu, double v_plus, double u_minus, double u_plus);
};

struct Grid {
    double R = 0.0;
    std::size_t n = 0;
    double dx = 0.0;
    std::vector<double> x;

    double operator[](std::size_t i) const { return x[i]; }
};

Grid make_grid(double R, std::size_t n);

// Throws ValidationError if f does not match the grid or holds a non-finite value.
void check_field(const Field& f, const Grid& g, const char* name);

} // namespace pcns
