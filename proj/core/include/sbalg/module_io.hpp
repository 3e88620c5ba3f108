#pragma once

#include "sbalg/representation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sbalg {

// Accepts "lambda:r=1,m=3", "lambda1prime:r=1", the canonical names
// "lambda_r1_m3" and "lambda1prime_r1", or "file:<path>" for a presentation
// file. Throws std::invalid_argument (or ParseError for a bad file).
AlgebraPtr algebra_from_spec(std::string_view spec);

// Module files:
//
//   module <name> over <algebra>
//   string <vertex> <arrow>^+1 <arrow>^-1 ...
//   sum <module> <module> ...
//   proj <vertex>
//   raw
//     dims <vertex>=<n> ...
//     mat <arrow> <rows>x<cols> : <entries, row-major, "p/q">
//   end
//
// Each module has exactly one body. `sum` refers to modules defined earlier
// in the same file; the last module is the file's main module.
template <Field K>
struct ModuleFile {
    AlgebraPtr algebra;
    std::vector<std::string> names;
    std::vector<RepPtr<K>> modules;

    const RepPtr<K>& main() const { return modules.back(); }
    RepPtr<K> find(std::string_view name) const;
};

// With `algebra` set, the `over` clauses are not resolved and every module is
// read over that algebra. Throws ParseError with the offending line.
template <Field K>
ModuleFile<K> parse_modules(std::string_view text, AlgebraPtr algebra = nullptr);

// Raw-format text for one module; parse_modules reads it back exactly.
template <Field K>
std::string emit_module(std::string_view name, const Representation<K>& m);

// "string" line for a walk.
std::string emit_string_line(const StringWord& w);

#define SBALG_IO_EXTERN(K)                                                                 \
    extern template struct ModuleFile<K>;                                                  \
    extern template ModuleFile<K> parse_modules<K>(std::string_view, AlgebraPtr);          \
    extern template std::string emit_module(std::string_view, const Representation<K>&);

SBALG_IO_EXTERN(Rational)
SBALG_IO_EXTERN(ModP)
#undef SBALG_IO_EXTERN

}  // namespace sbalg
