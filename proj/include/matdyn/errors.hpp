#pragma once

#include <stdexcept>
#include <string>

namespace matdyn {

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct IndeterminatePoint : std::runtime_error {
    explicit IndeterminatePoint(const std::string& what) : std::runtime_error(what) {}
};

struct PoleOfPsi : std::runtime_error {
    explicit PoleOfPsi(const std::string& what) : std::runtime_error(what) {}
};

struct PoleOfMap : std::runtime_error {
    explicit PoleOfMap(const std::string& what) : std::runtime_error(what) {}
};

struct NotRootOfUnity : std::runtime_error {
    explicit NotRootOfUnity(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFiber : std::runtime_error {
    explicit DegenerateFiber(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateAngle : std::runtime_error {
    explicit DegenerateAngle(const std::string& what) : std::runtime_error(what) {}
};

struct OutsideDomain : std::runtime_error {
    explicit OutsideDomain(const std::string& what) : std::runtime_error(what) {}
};

struct PointBudgetExceeded : std::runtime_error {
    explicit PointBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace matdyn
