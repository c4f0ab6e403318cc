#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liekn/linalg.hpp"

namespace liekn {

/// One place where a defining identity fails: the basis tuple and the
/// (nonzero) difference of the two sides.
struct Witness {
    std::string condition;
    std::vector<std::size_t> indices;
    std::variant<Vector, Matrix> defect;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Verdict of a check plus the exhaustive list of failing basis tuples.
class CheckReport {
public:
    CheckReport() = default;
    explicit CheckReport(std::string name) : name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }
    bool holds() const noexcept { return witnesses_.empty(); }
    explicit operator bool() const noexcept { return holds(); }
    const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }

    void add(std::string condition, std::vector<std::size_t> indices, std::variant<Vector, Matrix> defect) {
        witnesses_.push_back({std::move(condition), std::move(indices), std::move(defect)});
    }

    /// Records a defect only if it is nonzero.
    void expect_zero(const std::string& condition, std::vector<std::size_t> indices, Vector defect) {
        if (!defect.is_zero()) add(condition, std::move(indices), std::move(defect));
    }
    void expect_zero(const std::string& condition, std::vector<std::size_t> indices, Matrix defect) {
        if (!defect.is_zero()) add(condition, std::move(indices), std::move(defect));
    }

    /// Appends all witnesses of `other`.
    CheckReport& absorb(const CheckReport& other) {
        witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
        return *this;
    }

    friend std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
        os << r.name_ << ": " << (r.holds() ? "holds" : "fails");
        for (const auto& w : r.witnesses_) {
            os << "\n  " << w.condition << " at (";
            for (std::size_t k = 0; k < w.indices.size(); ++k) os << (k ? "," : "") << w.indices[k];
            os << ") defect ";
            std::visit([&os](const auto& d) { os << d; }, w.defect);
        }
        return os;
    }

private:
    std::string name_;
    std::vector<Witness> witnesses_;
};

/// Construction of a validated object failed; carries the failing report.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(CheckReport report)
        : std::runtime_error(describe(report)), report_(std::move(report)) {}

    const CheckReport& report() const noexcept { return report_; }

private:
    static std::string describe(const CheckReport& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    }

    CheckReport report_;
};

} // namespace liekn
