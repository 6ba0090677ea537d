#include "dodgson/condensation.hpp"

#include <ostream>
#include <set>
#include <sstream>

#include "dodgson/matrix_io.hpp"

namespace dodgson {

ZeroPolicy ZeroPolicy::fail() { return {PolicyKind::fail, 1}; }

ZeroPolicy ZeroPolicy::row_swap(int max_restarts) {
    if (max_restarts < 1)
        throw Error("row_swap policy needs max_restarts >= 1, got " +
                    std::to_string(max_restarts));
    return {PolicyKind::row_swap, max_restarts};
}

ZeroPolicy ZeroPolicy::bareiss_fallback() { return {PolicyKind::bareiss_fallback, 1}; }

ZeroPolicy ZeroPolicy::parse(const std::string& text) {
    std::string name = text;
    std::string arg;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        arg = text.substr(colon + 1);
    }
    if (name == "fail") {
        if (!arg.empty()) throw Error("zero policy 'fail' takes no argument");
        return fail();
    }
    if (name == "row_swap") {
        if (arg.empty()) return row_swap();
        try {
            std::size_t pos = 0;
            int restarts = std::stoi(arg, &pos);
            if (pos != arg.size()) throw std::invalid_argument(arg);
            return row_swap(restarts);
        } catch (const std::exception&) {
            throw Error("bad restart count in zero policy: '" + text + "'");
        }
    }
    if (name == "bareiss_fallback") {
        if (!arg.empty()) throw Error("zero policy 'bareiss_fallback' takes no argument");
        return bareiss_fallback();
    }
    throw Error("unknown zero policy: '" + text +
                "' (expected fail, row_swap[:N] or bareiss_fallback)");
}

std::string ZeroPolicy::str() const {
    switch (kind) {
        case PolicyKind::fail: return "fail";
        case PolicyKind::row_swap: return "row_swap:" + std::to_string(max_restarts);
        case PolicyKind::bareiss_fallback: return "bareiss_fallback";
    }
    return "?";
}

ZeroDivisorError::ZeroDivisorError(int row, int col)
    : Error("zero divisor at pos (" + std::to_string(row) + "," + std::to_string(col) + ")"),
      row_(row),
      col_(col) {}

namespace {

Matrix ones_matrix(const RingDomain& d, int n) {
    Matrix m(d, n, n);
    const Scalar one = Scalar::one(d);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.set(i, j, one);
    return m;
}

Scalar cross_minor(const Matrix& m, int i, int j) {
    return m.at(i, j) * m.at(i + 1, j + 1) - m.at(i, j + 1) * m.at(i + 1, j);
}

/// det of the connected (size x size) block of W with top-left corner (r, c).
Scalar block_det(const Matrix& W, int r, int c, int size) {
    Matrix block(W.domain(), size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) block.set(i + 1, j + 1, W.at(r + i, c + j));
    return det_bareiss(block);
}

}  // namespace

Matrix condense_step(const Matrix& current, const Matrix& divisor) {
    if (!current.square() || !divisor.square())
        throw Error("condense_step: square matrices required");
    const int m = current.n();
    if (m < 2) throw Error("condense_step: current must be at least 2x2");
    if (divisor.n() != m - 1)
        throw Error("condense_step: divisor size " + std::to_string(divisor.n()) +
                    " does not match current size " + std::to_string(m));
    if (current.domain() != divisor.domain())
        throw DomainMismatch("condense_step: domains differ");

    Matrix next(current.domain(), m - 1, m - 1);
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = 1; j <= m - 1; ++j) {
            const Scalar& d = divisor.at(i, j);
            if (d.is_zero()) throw ZeroDivisorError(i, j);
            next.set(i, j, div_exact(cross_minor(current, i, j), d));
        }
    }
    return next;
}

std::pair<Matrix, bool> apply_row_swap_policy(const Matrix& working, const PolicyEvent& zero,
                                              int restarts_used, int max_restarts) {
    if (restarts_used >= max_restarts)
        throw CondensationAbort("row_swap policy exhausted after " +
                                std::to_string(restarts_used) + " restarts (zero divisor at level " +
                                std::to_string(zero.level) + " pos (" + std::to_string(zero.row) +
                                "," + std::to_string(zero.col) + "))");
    const int r = zero.row + zero.level;  // divisor (i,j) sits over working row i+level
    if (r + 1 > working.n())
        throw Error("row swap out of range at row " + std::to_string(r));
    return {swap_rows(working, r, r + 1), true};
}

std::pair<Scalar, CondensationTrace> dodgson_det(const Matrix& A, const ZeroPolicy& policy) {
    const int n = A.n();  // throws on non-square
    if (policy.kind == PolicyKind::row_swap && policy.max_restarts < 1)
        throw Error("row_swap policy needs max_restarts >= 1");

    CondensationTrace trace;
    if (n == 0) {
        trace.levels.push_back(A);
        trace.final_det = Scalar::one(A.domain());
        return {trace.final_det, trace};
    }

    Matrix working = A;
    int restarts = 0;
    std::set<std::uint64_t> seen{working.digest()};

    for (;;) {
        trace.levels.clear();
        trace.levels.push_back(working);
        bool restarted = false;

        for (int m = 1; m <= n - 1 && !restarted; ++m) {
            const Matrix& cur = trace.levels[static_cast<std::size_t>(m - 1)];
            const Matrix divisor = (m == 1)
                                       ? ones_matrix(A.domain(), n - 1)
                                       : interior(trace.levels[static_cast<std::size_t>(m - 2)]);
            const int level = m - 1;  // events report the divisor's level
            const int size = n - m;
            Matrix next(A.domain(), size, size);
            for (int i = 1; i <= size && !restarted; ++i) {
                for (int j = 1; j <= size && !restarted; ++j) {
                    const Scalar& d = divisor.at(i, j);
                    if (!d.is_zero()) {
                        next.set(i, j, div_exact(cross_minor(cur, i, j), d));
                        continue;
                    }
                    switch (policy.kind) {
                        case PolicyKind::fail:
                            throw CondensationAbort(
                                "zero divisor at level " + std::to_string(level) + " pos (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") under fail policy");
                        case PolicyKind::bareiss_fallback: {
                            // Level-m entry (i,j) is the determinant of the
                            // connected (m+1)-block of the working matrix at
                            // (i,j); computing it directly keeps the pyramid
                            // complete and exact.
                            trace.policy_events.push_back({level, i, j, "bareiss_fallback"});
                            next.set(i, j, block_det(working, i, j, m + 1));
                            break;
                        }
                        case PolicyKind::row_swap: {
                            PolicyEvent ev{level, i, j, "row_swap"};
                            trace.policy_events.push_back(ev);
                            auto [swapped, flip] =
                                apply_row_swap_policy(working, ev, restarts, policy.max_restarts);
                            if (!seen.insert(swapped.digest()).second)
                                throw CondensationAbort(
                                    "row_swap policy cycled: swap at level " +
                                    std::to_string(level) + " pos (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") revisits a seen matrix");
                            working = std::move(swapped);
                            if (flip) trace.sign = -trace.sign;
                            ++restarts;
                            restarted = true;
                            break;
                        }
                    }
                }
            }
            if (!restarted) trace.levels.push_back(std::move(next));
        }
        if (!restarted) break;
    }

    const Scalar raw = trace.levels.back().at(1, 1);
    trace.final_det = (trace.sign == 1) ? raw : -raw;
    return {trace.final_det, trace};
}

void write_trace(std::ostream& out, const CondensationTrace& trace) {
    for (std::size_t i = 0; i < trace.levels.size(); ++i) {
        out << "@level " << i << " @sign " << (trace.sign == 1 ? "+1" : "-1") << "\n";
        write_matrix(out, trace.levels[i], /*with_domain=*/false);
    }
    for (const PolicyEvent& ev : trace.policy_events)
        out << "# policy " << ev.action << " at level " << ev.level << " pos (" << ev.row << ","
            << ev.col << ")\n";
}

std::string trace_to_string(const CondensationTrace& trace) {
    std::ostringstream os;
    write_trace(os, trace);
    return os.str();
}

}  // namespace dodgson
