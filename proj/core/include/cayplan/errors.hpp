#ifndef CAYPLAN_ERRORS_HPP
#define CAYPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cayplan {

// Malformed or semantically invalid input (bad JSON, unknown vertex ids,
// duplicate ids, orders < 2, ...). CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was exceeded (e.g. ball vertex budget).
// CLI maps this to exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated precondition
// (e.g. kuratowski_witness on a planar graph, plan on a non-planar one).
class precondition_error : public std::logic_error {
public:
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace cayplan

#endif
