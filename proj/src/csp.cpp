#include "euclid/csp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <sstream>
#include <stdexcept>

namespace euclid::csp {

VarId DomainStore::add(const Interval& domain)
{
    domains_.push_back(domain);
    return VarId{static_cast<std::uint32_t>(domains_.size() - 1)};
}

bool DomainStore::failed() const noexcept
{
    return std::any_of(domains_.begin(), domains_.end(),
                       [](const Interval& d) { return d.is_empty(); });
}

void ChangeSet::insert(VarId v) noexcept
{
    if (!contains(v) && count_ < ids_.size())
        ids_[count_++] = v;
}

bool ChangeSet::contains(VarId v) const noexcept
{
    return std::find(begin(), end(), v) != end();
}

namespace {

// Records v in changed if its domain differs from before.
void note_change(ChangeSet& changed, const DomainStore& store, VarId v, const Interval& before)
{
    if (!(store[v] == before))
        changed.insert(v);
}

} // namespace

ChangeSet shrink_sum(DomainStore& store, const Sum& c)
{
    const Interval x = store[c.x];
    const Interval y = store[c.y];
    const Interval z = store[c.z];

    // Repeated ids accumulate every narrowing that targets them.
    store[c.x] = intersect(store[c.x], z - y);
    store[c.y] = intersect(store[c.y], z - x);
    store[c.z] = intersect(store[c.z], x + y);

    ChangeSet changed;
    note_change(changed, store, c.x, x);
    note_change(changed, store, c.y, y);
    note_change(changed, store, c.z, z);
    return changed;
}

ChangeSet shrink_prod(DomainStore& store, const Prod& c)
{
    const Interval x = store[c.x];
    const Interval y = store[c.y];
    const Interval z = store[c.z];

    store[c.x] = intersect(store[c.x], div_rel(store[c.z], store[c.y]));
    store[c.y] = intersect(store[c.y], div_rel(store[c.z], store[c.x]));
    store[c.z] = intersect(store[c.z], store[c.x] * store[c.y]);

    ChangeSet changed;
    note_change(changed, store, c.x, x);
    note_change(changed, store, c.y, y);
    note_change(changed, store, c.z, z);
    return changed;
}

ChangeSet shrink(DomainStore& store, const Constraint& c)
{
    return std::visit(
        [&store](const auto& k) {
            if constexpr (std::is_same_v<std::decay_t<decltype(k)>, Sum>)
                return shrink_sum(store, k);
            else
                return shrink_prod(store, k);
        },
        c);
}

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Consistent:
        return "consistent";
    case Status::Empty:
        return "empty";
    default:
        return "iteration-cap-exceeded";
    }
}

VarId Csp::add_variable(const Interval& domain)
{
    var_index_.emplace_back();
    return store_.add(domain);
}

void Csp::add(const Constraint& c)
{
    const auto [x, y, z] = std::visit([](const auto& k) { return std::array{k.x, k.y, k.z}; }, c);
    for (VarId v : {x, y, z})
        if (!store_.contains(v))
            throw std::out_of_range("constraint mentions unknown variable var" +
                                    std::to_string(v.index));
    const std::size_t id = constraints_.size();
    constraints_.push_back(c);
    for (VarId v : {x, y, z}) {
        auto& incident = var_index_[v.index];
        if (incident.empty() || incident.back() != id)
            incident.push_back(id);
    }
}

void Csp::narrow(VarId v, const Interval& with)
{
    store_[v] = intersect(store_[v], with);
}

namespace {

bool significant_reduction(const Interval& before, const Interval& after)
{
    if (after.is_empty())
        return true;
    const double w0 = before.width();
    if (std::isinf(w0))
        return true;
    const double w1 = after.width();
    return (w0 - w1) >= kReenqueueThreshold * w0;
}

std::array<VarId, 3> vars_of(const Constraint& c)
{
    return std::visit([](const auto& k) { return std::array{k.x, k.y, k.z}; }, c);
}

} // namespace

PropagationResult Csp::propagate(const PropagationOptions& options)
{
    PropagationResult result;
    if (store_.failed()) {
        result.status = Status::Empty;
        return result;
    }

    std::deque<std::size_t> active;
    std::vector<bool> queued(constraints_.size(), true);
    for (std::size_t i = 0; i < constraints_.size(); ++i)
        active.push_back(i);

    std::mt19937_64 rng(options.order_seed);

    while (!active.empty()) {
        if (result.dro_applications >= options.max_dro) {
            result.status = Status::IterationCapExceeded;
            return result;
        }

        std::size_t pick = 0;
        if (options.order_seed != 0) {
            std::uniform_int_distribution<std::size_t> dist(0, active.size() - 1);
            pick = dist(rng);
        }
        const std::size_t ci = active[pick];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
        queued[ci] = false;

        const auto vars = vars_of(constraints_[ci]);
        const std::array<Interval, 3> before{store_[vars[0]], store_[vars[1]], store_[vars[2]]};

        const ChangeSet changed = shrink(store_, constraints_[ci]);
        ++result.dro_applications;

        for (VarId v : changed) {
            if (store_[v].is_empty()) {
                result.status = Status::Empty;
                return result;
            }
        }

        bool worth_requeue = false;
        for (std::size_t k = 0; k < vars.size() && !worth_requeue; ++k)
            if (changed.contains(vars[k]))
                worth_requeue = significant_reduction(before[k], store_[vars[k]]);
        if (!worth_requeue)
            continue;

        // The constraint just applied is re-added too when its own
        // variables changed.
        for (VarId v : changed) {
            for (std::size_t other : var_index_[v.index]) {
                if (!queued[other]) {
                    queued[other] = true;
                    active.push_back(other);
                }
            }
        }
    }
    result.status = Status::Consistent;
    return result;
}

std::string Csp::dump() const
{
    std::ostringstream os;
    const auto domains = store_.domains();
    for (std::size_t i = 0; i < domains.size(); ++i)
        os << "var" << i << " = " << format_interval(domains[i]) << '\n';
    return os.str();
}

LinearDecomposition decompose_linear(Csp& csp, std::span<const Term> terms, const Interval& rhs)
{
    if (terms.empty())
        throw std::invalid_argument("linear form needs at least one term");

    LinearDecomposition out;
    for (const Term& t : terms) {
        const VarId coef = csp.add_constant(t.coefficient);
        const VarId product = csp.add_variable();
        csp.add(Prod{coef, t.var, product});
        out.coefficients.push_back(coef);
        out.products.push_back(product);
    }

    VarId acc = out.products.front();
    for (std::size_t i = 1; i < out.products.size(); ++i) {
        const VarId next = csp.add_variable();
        csp.add(Sum{acc, out.products[i], next});
        out.partial_sums.push_back(next);
        acc = next;
    }
    csp.narrow(acc, rhs);
    out.result = acc;
    return out;
}

} // namespace euclid::csp
