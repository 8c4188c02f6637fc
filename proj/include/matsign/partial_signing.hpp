// Partial sign assignments over the nonzero upper-triangular support of a
// symmetric matrix. Position order is row-major with i <= j; zero entries
// carry no sign choice, nonzero diagonal entries do.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matsign/matrix.hpp"

namespace matsign {

enum class SignState : std::int8_t { free_choice = 0, plus = +1, minus = -1 };

inline std::vector<std::pair<int, int>> support_positions(const SymMatrix& a) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if (a(i, j) != 0.0) pos.emplace_back(i, j);
    return pos;
}

class PartialSigning {
  public:
    static PartialSigning all_free(const SymMatrix& a) {
        PartialSigning s;
        s.n_ = a.dim();
        s.order_ = support_positions(a);
        s.states_.assign(s.order_.size(), SignState::free_choice);
        return s;
    }

    int dim() const { return n_; }
    const std::vector<std::pair<int, int>>& positions() const { return order_; }
    int size() const { return static_cast<int>(order_.size()); }

    SignState state(int idx) const {
        check_index(idx);
        return states_[static_cast<std::size_t>(idx)];
    }

    bool fully_fixed() const { return first_free() == -1; }

    // Index of the first unassigned position, -1 when none remain.
    int first_free() const {
        for (std::size_t k = 0; k < states_.size(); ++k)
            if (states_[k] == SignState::free_choice) return static_cast<int>(k);
        return -1;
    }

    // Copy with position idx assigned to sign (+1 or -1).
    PartialSigning fixed(int idx, int sign) const {
        check_index(idx);
        if (sign != 1 && sign != -1)
            throw std::domain_error("PartialSigning::fixed: sign must be +1 or -1");
        if (states_[static_cast<std::size_t>(idx)] != SignState::free_choice)
            throw std::domain_error("PartialSigning::fixed: position already assigned");
        PartialSigning s(*this);
        s.states_[static_cast<std::size_t>(idx)] = (sign == 1) ? SignState::plus : SignState::minus;
        return s;
    }

    // Requires every position assigned; positions off the support read +1.
    SymSignMatrix to_sym_sign_matrix() const {
        if (!fully_fixed())
            throw std::domain_error("PartialSigning::to_sym_sign_matrix: unassigned positions remain");
        SymSignMatrix s(n_, +1);
        for (std::size_t k = 0; k < order_.size(); ++k)
            s.set(order_[k].first, order_[k].second,
                  states_[k] == SignState::plus ? +1 : -1);
        return s;
    }

  private:
    void check_index(int idx) const {
        if (idx < 0 || idx >= static_cast<int>(order_.size()))
            throw std::out_of_range("PartialSigning: position index " + std::to_string(idx) +
                                    " out of range");
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> order_;
    std::vector<SignState> states_;
};

// Throws unless sigma was built over exactly a's nonzero support.
inline void require_matching_support(const SymMatrix& a, const PartialSigning& sigma,
                                     const char* where) {
    if (sigma.dim() != a.dim())
        throw std::domain_error(std::string(where) + ": signing dimension mismatch");
    if (sigma.positions() != support_positions(a))
        throw std::domain_error(std::string(where) + ": signing support does not match matrix");
}

}  // namespace matsign
