#include "wbsdp/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "wbsdp/parallel.hpp"

namespace wbsdp {

namespace {

void requireSameShape(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.p() != b.p() || a.q() != b.q() || a.delta() != b.delta())
        throw std::invalid_argument("algebra elements have mismatched (p, q, delta)");
}

}  // namespace

AlgebraElement AlgebraElement::unit(int p, int q, int delta) {
    return fromDiagram(identity(p, q), delta);
}

AlgebraElement AlgebraElement::fromDiagram(const Diagram& d, int delta, const Rat& coeff) {
    AlgebraElement e(d.p, d.q, delta);
    e.addTerm(d, coeff);
    return e;
}

Rat AlgebraElement::coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rat(0) : it->second;
}

void AlgebraElement::addTerm(const Diagram& d, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    requireSameShape(*this, o);
    for (const auto& [d, c] : o.terms_) addTerm(d, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    requireSameShape(*this, o);
    for (const auto& [d, c] : o.terms_) addTerm(d, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    out += o;
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    out -= o;
    return out;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
    AlgebraElement out(p_, q_, delta_);
    if (c == 0) return out;
    for (const auto& [d, v] : terms_) out.terms_.emplace(d, v * c);
    return out;
}

AlgebraElement mulSerial(const AlgebraElement& a, const AlgebraElement& b) {
    requireSameShape(a, b);
    AlgebraElement out(a.p(), a.q(), a.delta());
    const Rat delta(a.delta());
    for (const auto& [da, ca] : a.terms()) {
        for (const auto& [db, cb] : b.terms()) {
            ComposeResult r = compose(da, db);
            Rat c = ca * cb;
            for (int l = 0; l < r.loops; ++l) c *= delta;
            out.addTerm(r.diagram, c);
        }
    }
    return out;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    requireSameShape(a, b);
    if (!parallelEnabled() || a.termCount() * b.termCount() < 1024)
        return mulSerial(a, b);

    std::vector<const std::pair<const Diagram, Rat>*> rows;
    rows.reserve(a.termCount());
    for (const auto& term : a.terms()) rows.push_back(&term);

    const int nt = hardwareThreads();
    std::vector<AlgebraElement> partial(nt, AlgebraElement(a.p(), a.q(), a.delta()));
    const Rat delta(a.delta());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
#ifdef _OPENMP
        AlgebraElement& local = partial[omp_get_thread_num()];
#else
        AlgebraElement& local = partial[0];
#endif
        const auto& [da, ca] = *rows[i];
        for (const auto& [db, cb] : b.terms()) {
            ComposeResult r = compose(da, db);
            Rat c = ca * cb;
            for (int l = 0; l < r.loops; ++l) c *= delta;
            local.addTerm(r.diagram, c);
        }
    }
    AlgebraElement out(a.p(), a.q(), a.delta());
    for (auto& part : partial) out += part;
    return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
    AlgebraElement out(a.p(), a.q(), a.delta());
    for (const auto& [d, c] : a.terms()) out.addTerm(verticalFlip(d), c);
    return out;
}

AlgebraElement mirrorElement(const AlgebraElement& a) {
    AlgebraElement out(a.q(), a.p(), a.delta());
    for (const auto& [d, c] : a.terms()) out.addTerm(mirror(d), c);
    return out;
}

AlgebraElement evalPolynomial(const AlgebraElement& x, const std::vector<Rat>& roots,
                              const Rat& target) {
    AlgebraElement out = AlgebraElement::unit(x.p(), x.q(), x.delta());
    const AlgebraElement one = out;
    for (const Rat& r : roots) {
        if (r == target)
            throw std::domain_error("content collision: interpolation root equals target");
        AlgebraElement factor = (x - one.scaled(r)).scaled(Rat(1) / (target - r));
        out = mul(out, factor);
    }
    return out;
}

Rat elementTrace(const AlgebraElement& a) {
    Rat out = 0;
    for (const auto& [d, c] : a.terms())
        out += c * intPow(a.delta(), static_cast<unsigned long>(traceLoops(d)));
    return out;
}

AlgebraElement elementPartialTrace(const AlgebraElement& a, const std::set<int>& S) {
    bool first = true;
    AlgebraElement out;
    for (const auto& [d, c] : a.terms()) {
        PartialTraceResult r = partialTrace(d, S);
        if (first) {
            out = AlgebraElement(r.diagram.p, r.diagram.q, a.delta());
            first = false;
        }
        out.addTerm(r.diagram, c * intPow(a.delta(), static_cast<unsigned long>(r.loops)));
    }
    if (first) {
        // Empty input: shape of the result is still well-defined.
        PartialTraceResult r = partialTrace(identity(a.p(), a.q()), S);
        out = AlgebraElement(r.diagram.p, r.diagram.q, a.delta());
    }
    return out;
}

std::string elementToJson(const AlgebraElement& a) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& [d, c] : a.terms()) {
        if (!first) os << ',';
        first = false;
        os << "{\"diagram\":\"" << diagramToString(d) << "\",\"num\":\""
           << c.get_num().get_str() << "\",\"den\":\"" << c.get_den().get_str() << "\"}";
    }
    os << ']';
    return os.str();
}

}  // namespace wbsdp
