#pragma once

#include <cmath>
#include <complex>

namespace taub {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(double v)
    {
        add(v);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> v)
    {
        re_.add(v.real());
        im_.add(v.imag());
    }
    CompensatedComplexSum& operator+=(std::complex<double> v)
    {
        add(v);
        return *this;
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

}  // namespace taub
