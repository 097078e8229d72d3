#include "symmon/projector.hpp"

namespace symmon {

namespace {

// One weight component. h is the H-eigenvalue; the series index j multiplies
// by 1/(j (h+j+1)) at each step, so a singularity at step j means h+j+1 = 0.
Polynomial project_component(const Sl2Triple& t, const TriDegree& d,
                             const Polynomial& comp, SingularPolicy policy,
                             bool& regularized, std::vector<ProjectionNote>& notes) {
    const Rational h = t.weight_of(d);

    // X^j comp, stopping at the first zero; X is locally nilpotent here.
    std::vector<Polynomial> xpow;
    xpow.push_back(comp);
    for (;;) {
        Polynomial next = apply(t.X, xpow.back());
        if (next.is_zero()) break;
        xpow.push_back(std::move(next));
    }
    const std::size_t top = xpow.size() - 1; // largest j with X^j comp != 0

    // Locate the unique vanishing factor h + i, i in 2..top+1, if any.
    int singular_i = 0;
    for (std::size_t j = 1; j <= top; ++j) {
        if (h + Rational(static_cast<long>(j + 1)) == Rational(0)) {
            singular_i = static_cast<int>(j + 1);
            break;
        }
    }

    if (singular_i == 0) {
        Polynomial acc = comp;
        Rational coeff(1);
        for (std::size_t j = 1; j <= top; ++j) {
            coeff *= Rational(-1);
            coeff /= Rational(static_cast<long>(j)) *
                     (h + Rational(static_cast<long>(j + 1)));
            Polynomial term = xpow[j];
            for (std::size_t r = 0; r < j; ++r) term = apply(t.Y, term);
            acc += term.scaled(coeff);
        }
        return acc;
    }

    if (policy == SingularPolicy::Raise)
        throw SingularWeight("extremal projector: singular weight h = " + h.str() +
                                 " on component " + d.str(),
                             d.str(), h.str(), singular_i);

    // Residue evaluation: multiply the series by (h + singular_i) and
    // evaluate. Terms with j < singular_i - 1 vanish; later terms keep all
    // factors except the vanishing one. X pi = 0 survives this evaluation,
    // idempotency does not.
    regularized = true;
    notes.push_back(ProjectionNote{d, h, singular_i});
    const std::size_t j0 = static_cast<std::size_t>(singular_i - 1);
    Polynomial acc(comp.m());
    Rational coeff(1);
    // coeff for j0: (-1)^j0 / j0! * prod_{i=2..j0} (h+i)^-1  (factor i0 removed)
    for (std::size_t j = 1; j <= j0; ++j) {
        coeff *= Rational(-1);
        coeff /= Rational(static_cast<long>(j));
        if (j + 1 != static_cast<std::size_t>(singular_i))
            coeff /= (h + Rational(static_cast<long>(j + 1)));
    }
    for (std::size_t j = j0; j <= top; ++j) {
        if (j > j0) {
            coeff *= Rational(-1);
            coeff /= Rational(static_cast<long>(j)) *
                     (h + Rational(static_cast<long>(j + 1)));
        }
        Polynomial term = xpow[j];
        for (std::size_t r = 0; r < j; ++r) term = apply(t.Y, term);
        acc += term.scaled(coeff);
    }
    return acc;
}

} // namespace

ProjectionResult extremal_project(const Sl2Triple& t, const Polynomial& p,
                                  SingularPolicy policy) {
    ProjectionResult out;
    out.value = Polynomial::zero(p.m());
    for (const auto& [d, comp] : p.tri_components())
        out.value += project_component(t, d, comp, policy, out.regularized, out.notes);
    return out;
}

Polynomial extremal_apply(const Sl2Triple& t, const Polynomial& p) {
    return extremal_project(t, p, SingularPolicy::Raise).value;
}

ProjectionResult pi_so4_project(const OperatorCatalog& cat, const Polynomial& p,
                                SingularPolicy policy) {
    // The Ds series is always regular: its weights -2(b+c+m) keep every
    // denominator h + i <= -k - 2m + 1 < 0 on (x,y)-degree-k input.
    ProjectionResult first = extremal_project(cat.l_triple(), p, policy);
    ProjectionResult second =
        extremal_project(cat.ds_triple(), first.value, SingularPolicy::Raise);
    if (second.regularized || !second.notes.empty())
        throw std::logic_error("pi_so4: unexpected singular Ds weight");
    ProjectionResult out;
    out.value = std::move(second.value);
    out.regularized = first.regularized;
    out.notes = std::move(first.notes);
    return out;
}

Polynomial pi_so4(const OperatorCatalog& cat, const Polynomial& p) {
    return pi_so4_project(cat, p, SingularPolicy::Raise).value;
}

ProjectionResult LabeledGenerator::apply(const Polynomial& p,
                                         SingularPolicy policy) const {
    if (!symmon::apply(cat_->named("Ds"), p).is_zero() ||
        !symmon::apply(cat_->named("L"), p).is_zero())
        throw DomainError("LabeledGenerator: input not in ker(Ds, L)");
    Polynomial q = symmon::apply(q_.Q, p);
    ProjectionResult out = pi_so4_project(*cat_, q, policy);
    if (!symmon::apply(cat_->named("Ds"), out.value).is_zero() ||
        !symmon::apply(cat_->named("L"), out.value).is_zero())
        throw std::logic_error("LabeledGenerator: projected image escaped ker(Ds, L)");
    return out;
}

Polynomial LabeledGenerator::apply(const Polynomial& p) const {
    return apply(p, SingularPolicy::Raise).value;
}

} // namespace symmon
