#include "eurhythm/deepness.hpp"

#include <algorithm>
#include <stdexcept>

#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"

namespace eurhythm {

MultiplicityHistogram histogram(const Rhythm& r) {
    MultiplicityHistogram counts;
    const int k = r.onset_count();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) ++counts[geodesic_dist(r, i, j)];
    return counts;
}

bool is_erdos_deep(const Rhythm& r) {
    // The nonzero multiplicities must be exactly {1, ..., k-1}; for k <= 2
    // that set is empty or {1}, so such rhythms are always deep.
    const MultiplicityHistogram counts = histogram(r);
    const int k = r.onset_count();
    if (static_cast<int>(counts.size()) != std::max(k - 1, 0)) return false;
    std::vector<int> mults;
    mults.reserve(counts.size());
    for (const auto& [dist, count] : counts) mults.push_back(count);
    std::sort(mults.begin(), mults.end());
    for (int i = 0; i < static_cast<int>(mults.size()); ++i)
        if (mults[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

bool is_winograd_deep(const Rhythm& r) {
    const MultiplicityHistogram counts = histogram(r);
    std::vector<int> mults;
    for (int d = 1; d <= r.timespan() / 2; ++d) {
        auto it = counts.find(d);
        mults.push_back(it == counts.end() ? 0 : it->second);
    }
    std::sort(mults.begin(), mults.end());
    return std::adjacent_find(mults.begin(), mults.end()) == mults.end();
}

Rhythm DeepForm::reconstruct() const {
    Rhythm base = [&] {
        if (kind == Kind::ExceptionalF) return exceptional_f();
        std::vector<int> base_onsets;
        base_onsets.reserve(static_cast<std::size_t>(onsets));
        for (int i = 0; i < onsets; ++i)
            base_onsets.push_back(static_cast<int>((static_cast<long long>(i) * base_step) %
                                                   base_timespan));
        return Rhythm(base_timespan, std::move(base_onsets));
    }();
    return rotate(scale(base, scaling), rotation);
}

bool DeepForm::parameters_valid() const {
    if (scaling < 1 || rotation < 0) return false;
    if (kind == Kind::ExceptionalF) return true;
    if (base_timespan < 1 || onsets < 0 || onsets > base_timespan) return false;
    if (base_timespan == 1) return base_step == 0 && onsets <= 1;
    return onsets <= base_timespan / 2 + 1 && base_step >= 1 &&
           base_step <= base_timespan / 2 && gcd(base_step, base_timespan) == 1;
}

namespace {

// Smallest delta with rotate(scale(base, alpha), delta) == r; the witness
// construction guarantees one exists.
std::optional<int> smallest_reconstructing_rotation(const Rhythm& base, int alpha,
                                                    const Rhythm& r) {
    const Rhythm scaled = scale(base, alpha);
    for (int delta = 0; delta < r.timespan(); ++delta)
        if (rotate(scaled, delta) == r) return delta;
    return std::nullopt;
}

std::optional<DeepForm> generated_witness(const Rhythm& r, int alpha, const Rhythm& base) {
    const int k = base.onset_count();
    const int nb = base.timespan();
    const MultiplicityHistogram counts = histogram(base);
    // The generator is the unique distance of multiplicity k-1.
    int step = -1;
    for (const auto& [dist, count] : counts)
        if (count == k - 1) step = dist;
    if (step < 0 || gcd(step, nb) != 1) return std::nullopt;
    // Some onset must start the generated path.
    for (int b : base.onsets()) {
        std::vector<int> path;
        path.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            path.push_back(static_cast<int>((b + static_cast<long long>(i) * step) % nb));
        std::sort(path.begin(), path.end());
        if (path != base.onsets()) continue;
        DeepForm form;
        form.kind = DeepForm::Kind::Generated;
        form.scaling = alpha;
        form.onsets = k;
        form.base_timespan = nb;
        form.base_step = step;
        std::vector<int> canonical;
        canonical.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            canonical.push_back(static_cast<int>((static_cast<long long>(i) * step) % nb));
        auto delta = smallest_reconstructing_rotation(Rhythm(nb, std::move(canonical)), alpha, r);
        if (!delta) continue;
        form.rotation = *delta;
        return form;
    }
    return std::nullopt;
}

}  // namespace

std::optional<DeepForm> characterize_deep(const Rhythm& r) {
    if (!is_erdos_deep(r)) return std::nullopt;
    const int k = r.onset_count();
    const int n = r.timespan();

    if (k <= 1) {
        // D_{k,n,1} covers these directly; timespan 1 has no admissible
        // step, so 0 stands in there.
        DeepForm form;
        form.kind = DeepForm::Kind::Generated;
        form.scaling = 1;
        form.onsets = k;
        form.base_timespan = n;
        form.base_step = n >= 2 ? 1 : 0;
        form.rotation = k == 1 ? r.onsets().front() : 0;
        return form;
    }

    // The scaling is forced: the gcd of all onset differences (with n).
    const int anchor = r.onsets().front();
    long long g = n;
    for (int o : r.onsets()) g = gcd((o - anchor + n) % n, g);
    const int alpha = static_cast<int>(g);
    const int nb = n / alpha;
    std::vector<int> base_onsets;
    base_onsets.reserve(static_cast<std::size_t>(k));
    for (int o : r.onsets()) base_onsets.push_back(((o - anchor + n) % n) / alpha);
    const Rhythm base(nb, std::move(base_onsets));

    if (auto form = generated_witness(r, alpha, base)) return form;

    if (k == 4 && nb == 6) {
        if (auto delta = smallest_reconstructing_rotation(exceptional_f(), alpha, r)) {
            DeepForm form;
            form.kind = DeepForm::Kind::ExceptionalF;
            form.scaling = alpha;
            form.rotation = *delta;
            return form;
        }
    }
    return std::nullopt;
}

std::vector<int> shelling(const Rhythm& r) {
    const auto form = characterize_deep(r);
    if (!form) throw std::invalid_argument("shelling: rhythm is not Erdos-deep");
    const int n = r.timespan();
    std::vector<int> generation_order;
    if (form->kind == DeepForm::Kind::ExceptionalF) {
        for (int f : {0, 1, 2, 4})
            generation_order.push_back((form->rotation + form->scaling * f) % n);
    } else {
        for (int i = 0; i < form->onsets; ++i) {
            const long long onset = (static_cast<long long>(i) * form->base_step) %
                                    form->base_timespan;
            generation_order.push_back(
                static_cast<int>((form->rotation + form->scaling * onset) % n));
        }
    }
    // Remove the most recently generated onset first.
    std::reverse(generation_order.begin(), generation_order.end());
    return generation_order;
}

bool validate_shelling(const Rhythm& r, const std::vector<int>& order) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != r.onsets())
        throw std::invalid_argument("validate_shelling: order is not a permutation of the onsets");
    Rhythm current = r;
    for (int pulse : order) {
        if (!is_erdos_deep(current)) return false;
        current = without_onset(current, pulse);
    }
    return is_erdos_deep(current);  // empty rhythm, trivially deep
}

}  // namespace eurhythm
