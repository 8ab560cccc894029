#include "homcalc/surface.hpp"

#include <algorithm>

#include "homcalc/matrix.hpp"

namespace homcalc {

std::string annulus_type_name(AnnulusType t) {
    switch (t) {
        case AnnulusType::NN: return "NN";
        case AnnulusType::NS: return "NS";
        case AnnulusType::SN: return "SN";
        case AnnulusType::SS: return "SS";
    }
    return "";
}

AnnulusType classify_annulus(const Vec& c_minus, const Vec& c_plus) {
    bool minus_nonsep = !is_zero_vec(c_minus);
    bool plus_nonsep = !is_zero_vec(c_plus);
    if (minus_nonsep && plus_nonsep) return AnnulusType::NN;
    if (minus_nonsep) return AnnulusType::NS;
    if (plus_nonsep) return AnnulusType::SN;
    return AnnulusType::SS;
}

Int SurfaceClass::pairing_against(const BasicClassSet& b, std::size_t index) const {
    if (pairings) {
        if (pairings->size() != b.classes.size())
            throw InvalidInput("pairing data does not match the class set");
        return (*pairings)[index];
    }
    if (homology.empty()) throw InvalidInput("surface class has neither homology nor pairings");
    return dot(b.classes[index], homology);
}

SurfaceClass cut_paste_class(const SurfaceClass& s, const SurfaceClass& g, const Int& m) {
    if (m < 0) throw InvalidInput("cut-and-paste copy count must be nonnegative");
    SurfaceClass out;
    out.euler = s.euler + m * g.euler;
    if (!s.homology.empty() && !g.homology.empty())
        out.homology = vec_add(s.homology, scaled(g.homology, m));
    else if (s.homology.empty() != g.homology.empty())
        throw InvalidInput("cut-and-paste needs homology on both classes or neither");
    if (s.pairings && g.pairings) {
        if (s.pairings->size() != g.pairings->size())
            throw InvalidInput("pairing data lengths differ");
        std::vector<Int> combined(s.pairings->size());
        for (std::size_t i = 0; i < combined.size(); ++i)
            combined[i] = (*s.pairings)[i] + m * (*g.pairings)[i];
        out.pairings = std::move(combined);
    }
    return out;
}

Int lower_sub_threshold(const BasicClassSet& b, const SurfaceClass& s) {
    Int best = 0;
    for (std::size_t i = 0; i < b.classes.size(); ++i) {
        Int gap = abs_int(s.pairing_against(b, i) - s.euler);
        best = std::max(best, gap);
    }
    return best + 1;
}

LowerSubReport verify_lower_sub(const BasicClassSet& b, const SurfaceClass& s,
                                const SurfaceClass& g, const Int& m) {
    LowerSubReport rep;
    rep.m = m;
    rep.threshold = lower_sub_threshold(b, s);
    SurfaceClass high = cut_paste_class(s, g, m);
    for (std::size_t i = 0; i < b.classes.size(); ++i) {
        if (high.pairing_against(b, i) <= high.euler) rep.in_high.push_back(i);
        if (g.pairing_against(b, i) <= g.euler) rep.in_low.push_back(i);
    }
    rep.subset_ok = std::includes(rep.in_low.begin(), rep.in_low.end(), rep.in_high.begin(),
                                  rep.in_high.end());
    return rep;
}

}  // namespace homcalc
