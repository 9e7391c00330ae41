#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wbsdp/diagram.hpp"
#include "wbsdp/rational.hpp"

namespace wbsdp {

// A formal rational linear combination of walled Brauer diagrams with a fixed
// integer loop parameter delta = d. Zero-coefficient terms are pruned, so
// term-wise equality of canonical forms is element equality.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(int p, int q, int delta) : p_(p), q_(q), delta_(delta) {}

    static AlgebraElement zero(int p, int q, int delta) { return {p, q, delta}; }
    static AlgebraElement unit(int p, int q, int delta);
    static AlgebraElement fromDiagram(const Diagram& d, int delta, const Rat& coeff = 1);

    int p() const { return p_; }
    int q() const { return q_; }
    int delta() const { return delta_; }
    const std::map<Diagram, Rat>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    Rat coeff(const Diagram& d) const;
    void addTerm(const Diagram& d, const Rat& c);

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const Rat& c) const;

    bool operator==(const AlgebraElement& o) const {
        return p_ == o.p_ && q_ == o.q_ && delta_ == o.delta_ && terms_ == o.terms_;
    }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  private:
    int p_ = 0;
    int q_ = 0;
    int delta_ = 2;
    std::map<Diagram, Rat> terms_;
};

// Product kernels. mul() routes to the OpenMP version; mulSerial is the
// reference implementation kept for testing and benchmarking.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement mulSerial(const AlgebraElement& a, const AlgebraElement& b);

// Vertical flip on every diagram, coefficients unchanged (all real).
AlgebraElement adjoint(const AlgebraElement& a);

// Left-right mirror, mapping elements of B_{p,q} to B_{q,p}.
AlgebraElement mirrorElement(const AlgebraElement& a);

// prod_r (x - r) / (target - r), with (x - r) meaning x - r * unit. Throws
// std::domain_error when target equals one of the roots (a content collision,
// which the truncated Bratteli diagram rules out).
AlgebraElement evalPolynomial(const AlgebraElement& x, const std::vector<Rat>& roots,
                              const Rat& target);

Rat elementTrace(const AlgebraElement& a);
AlgebraElement elementPartialTrace(const AlgebraElement& a, const std::set<int>& S);

// JSON-ish text serialization: list of {diagram, num, den}.
std::string elementToJson(const AlgebraElement& a);

}  // namespace wbsdp
