#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "euclid/interval.hpp"

namespace euclid::csp {

/// Dense index of one real-valued variable in a store.
struct VarId {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(VarId, VarId) = default;
};

/// One interval domain per variable. A store is failed once any domain is
/// empty.
class DomainStore {
public:
    VarId add(const Interval& domain);

    std::size_t size() const noexcept { return domains_.size(); }
    bool contains(VarId v) const noexcept { return v.index < domains_.size(); }
    bool failed() const noexcept;

    const Interval& operator[](VarId v) const { return domains_.at(v.index); }
    Interval& operator[](VarId v) { return domains_.at(v.index); }

    std::span<const Interval> domains() const noexcept { return domains_; }

    friend bool operator==(const DomainStore&, const DomainStore&) = default;

private:
    std::vector<Interval> domains_;
};

/// x + y = z
struct Sum {
    VarId x, y, z;
    friend constexpr bool operator==(const Sum&, const Sum&) = default;
};

/// x * y = z
struct Prod {
    VarId x, y, z;
    friend constexpr bool operator==(const Prod&, const Prod&) = default;
};

using Constraint = std::variant<Sum, Prod>;

/// The distinct variables a domain reduction strictly narrowed.
class ChangeSet {
public:
    void insert(VarId v) noexcept;
    bool contains(VarId v) const noexcept;
    bool empty() const noexcept { return count_ == 0; }
    std::size_t size() const noexcept { return count_; }
    const VarId* begin() const noexcept { return ids_.data(); }
    const VarId* end() const noexcept { return ids_.data() + count_; }

private:
    std::array<VarId, 3> ids_{};
    std::size_t count_ = 0;
};

/// Domain reduction for x + y = z:
///   X <- X & (Z - Y),  Y <- Y & (Z - X),  Z <- Z & (X + Y)
/// with all right-hand sides taken from the domains before the call.
ChangeSet shrink_sum(DomainStore& store, const Sum& c);

/// Domain reduction for x * y = z, applied in sequence on updated domains:
///   X <- X & div_rel(Z, Y),  Y <- Y & div_rel(Z, X),  Z <- Z & (X * Y)
ChangeSet shrink_prod(DomainStore& store, const Prod& c);

ChangeSet shrink(DomainStore& store, const Constraint& c);

enum class Status { Consistent, Empty, IterationCapExceeded };

std::string_view to_string(Status s) noexcept;

inline constexpr std::size_t kDefaultDroCap = 1'000'000;

/// A narrowing counts toward re-enqueueing only when some changed domain
/// lost at least this fraction of its width.
inline constexpr double kReenqueueThreshold = 1e-15;

struct PropagationOptions {
    std::size_t max_dro = kDefaultDroCap;
    /// 0 processes the active set first-in first-out; any other value picks
    /// the next constraint pseudo-randomly from that seed.
    std::uint64_t order_seed = 0;
};

struct PropagationResult {
    Status status = Status::Consistent;
    std::size_t dro_applications = 0;
};

/// Interval constraint store: variable domains, Sum/Prod constraints, and
/// for each variable the constraints that mention it. Constants are
/// variables whose initial domain is the constant's interval.
class Csp {
public:
    VarId add_variable(const Interval& domain = Interval::entire());
    VarId add_constant(const Interval& value) { return add_variable(value); }

    /// Throws std::out_of_range for ids not in the store.
    void add(const Constraint& c);

    std::size_t variable_count() const noexcept { return store_.size(); }
    std::size_t constraint_count() const noexcept { return constraints_.size(); }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    std::span<const std::size_t> constraints_of(VarId v) const { return var_index_.at(v.index); }

    const DomainStore& store() const noexcept { return store_; }
    const Interval& domain(VarId v) const { return store_[v]; }
    /// Intersects the domain of v with `with`.
    void narrow(VarId v, const Interval& with);

    /// Worklist propagation to a fixpoint. Mutates the store; on Empty the
    /// store holds at least one empty domain, and on IterationCapExceeded it
    /// holds the sound but possibly unfinished state reached so far.
    PropagationResult propagate(const PropagationOptions& options = {});

    /// `var<i> = [lo, hi]`, one line per variable.
    std::string dump() const;

private:
    DomainStore store_;
    std::vector<Constraint> constraints_;
    std::vector<std::vector<std::size_t>> var_index_;
};

struct Term {
    Interval coefficient;
    VarId var;
};

/// Variables introduced by decompose_linear.
struct LinearDecomposition {
    std::vector<VarId> coefficients; // one constant per term
    std::vector<VarId> products;     // t_i = coefficient_i * var_i
    std::vector<VarId> partial_sums; // left fold of the products
    VarId result;                    // the final accumulator, narrowed to rhs
};

/// Adds sum_i(coefficient_i * var_i) = rhs to csp as Prod and Sum
/// constraints. Throws std::invalid_argument when terms is empty.
LinearDecomposition decompose_linear(Csp& csp, std::span<const Term> terms, const Interval& rhs);

} // namespace euclid::csp
