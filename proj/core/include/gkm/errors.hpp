#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad call: rank mismatch, level out of range, wrong basis kind, and so on.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

// Malformed or rejected input text. Positions are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Semantic problems with a graph, a class file, or a basis file.
class GraphError : public Error {
public:
    explicit GraphError(const std::string& what) : Error(what) {}
};

// A computation that is well posed in general failed on this input.
class ComputeError : public Error {
public:
    explicit ComputeError(const std::string& what) : Error(what) {}
};

// Two congruence moduli at the same vertex are proportional, so the
// interpolation step has no independent directions to work with.
class ProportionalModuliError : public ComputeError {
public:
    explicit ProportionalModuliError(const std::string& what) : ComputeError(what) {}
};

// The congruence system has no simultaneous solution.  This cannot happen
// for residues restricted from a class that already satisfies the edge
// congruences of a filtered geometry, but arbitrary residue lists can hit it.
class InconsistentCongruencesError : public ComputeError {
public:
    explicit InconsistentCongruencesError(const std::string& what) : ComputeError(what) {}
};

// A localization sum that was required to be a polynomial is not one.
// Carries the level at which the sum was taken.
class NonPolynomialIndexError : public ComputeError {
public:
    NonPolynomialIndexError(int level, const std::string& what)
        : ComputeError(what), level_(level) {}
    int level() const { return level_; }

private:
    int level_;
};

} // namespace gkm
