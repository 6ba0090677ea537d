#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dodgson/matrix.hpp"

namespace dodgson {

enum class PolicyKind { fail, row_swap, bareiss_fallback };

/// What to do when a condensation divisor entry is zero. Row swapping cannot
/// always clear interior zeros (a zero matrix defeats it), so the per-entry
/// Bareiss fallback is the default: it never aborts and keeps the pyramid
/// complete.
struct ZeroPolicy {
    PolicyKind kind = PolicyKind::bareiss_fallback;
    int max_restarts = 8;  // row_swap only; must be >= 1

    static ZeroPolicy fail();
    static ZeroPolicy row_swap(int max_restarts = 8);
    static ZeroPolicy bareiss_fallback();

    /// "fail", "row_swap", "row_swap:12", "bareiss_fallback".
    static ZeroPolicy parse(const std::string& text);
    std::string str() const;
};

/// One remedy that fired: the level whose divisor vanished (numbered so that
/// dividing level m-1 by the interior of level m-2 reports level m-1), the
/// divisor position, and the action taken.
struct PolicyEvent {
    int level = 0;
    int row = 0;
    int col = 0;
    std::string action;  // "row_swap" or "bareiss_fallback"
};

/// Full condensation record: every level from the working matrix down to 1x1,
/// the sign accumulated from row swaps, and the events. levels[0] is the
/// working matrix, which differs from the input exactly when swaps fired.
struct CondensationTrace {
    std::vector<Matrix> levels;
    int sign = 1;
    std::vector<PolicyEvent> policy_events;
    Scalar final_det;
};

/// Zero divisor met inside one condensation step; carries the divisor
/// position for the policy layer (which knows the level).
class ZeroDivisorError : public Error {
public:
    ZeroDivisorError(int row, int col);
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_, col_;
};

/// Condensation gave up: fail policy hit a zero, or row_swap ran out of
/// distinct matrices to try.
class CondensationAbort : public Error {
public:
    explicit CondensationAbort(const std::string& what) : Error(what) {}
};

/// One condensation step: every connected 2x2 minor of current, divided by
/// the matching divisor entry. current is m x m (m >= 2), divisor is
/// (m-1) x (m-1); the first step divides by all-ones. Throws ZeroDivisorError
/// before attempting a division by zero.
Matrix condense_step(const Matrix& current, const Matrix& divisor);

/// The row-swap remedy: swap the working-matrix row under the zero divisor
/// (zero.row + zero.level) with the next row down, for a full restart. The
/// returned flag reports the sign flip (always true: one transposition).
/// Throws CondensationAbort when restarts_used >= max_restarts. Cycle
/// detection is the caller's job (it tracks matrix digests across restarts).
std::pair<Matrix, bool> apply_row_swap_policy(const Matrix& working, const PolicyEvent& zero,
                                              int restarts_used, int max_restarts);

/// Dodgson condensation with the given zero policy. The result is the exact
/// determinant (equal to det_bareiss, sign included) whenever it returns;
/// fail and row_swap may throw CondensationAbort instead.
std::pair<Scalar, CondensationTrace> dodgson_det(const Matrix& A,
                                                 const ZeroPolicy& policy = ZeroPolicy());

/// Levels in the matrix file format (no domain line) behind "@level i
/// @sign +/-1" headers, then events as "# policy <action> at level i pos (r,c)".
void write_trace(std::ostream& out, const CondensationTrace& trace);
std::string trace_to_string(const CondensationTrace& trace);

}  // namespace dodgson
