#ifndef CDG_DESCRIPTOR_IO_HPP
#define CDG_DESCRIPTOR_IO_HPP

#include <stdexcept>
#include <string>

#include "cdg/classifier.hpp"
#include "cdg/group_engine.hpp"

namespace cdg {

/// Parse failure with the offending key attached.
struct DescriptorError : std::runtime_error {
    std::string field;

    DescriptorError(std::string f, const std::string& message)
        : std::runtime_error(f + ": " + message), field(std::move(f)) {}
};

/// Descriptor text: one "key: value" pair per line, '#' comments and blank
/// lines ignored. Keys: socle, t, a, residual_shape, radical_vertices,
/// quotient_vertices, outer_index, outer_part_odd, sylow2_condition,
/// direct_product_with_R, p. Vertex lists are space-separated primes or
/// "none". Unknown keys and repeated keys are errors.
GroupDescriptor parse_descriptor_text(const std::string& text);
GroupDescriptor parse_descriptor_file(const std::string& path);

/// Machine-readable verdict: outcome/clause/cut_vertex lines, then the
/// canonical graph block, then violations and notes.
std::string format_verdict(const Verdict& v);

std::string format_report(const ConnectivityReport& r);

std::string format_nq_report(const NqReport& r);

}  // namespace cdg

#endif
