#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emst/errors.hpp"
#include "emst/isa.hpp"

// Assembly representation, two-pass assembler, disassembler, and the
// machine-image container with its on-disk format:
//   magic "EMST" | version byte 1 | entry point (big-endian u16) |
//   4096 big-endian u16 words | JSON metadata blob (source map, symbols).
// The binary portion is bit-exact across platforms.

namespace emst::asmx {

class AsmError : public Error {
public:
    enum class Kind { UndefinedLabel, DuplicateLabel, ImmediateOutOfRange, BadOperand, BadMnemonic, CapacityExceeded };
    AsmError(Kind kind, const std::string& detail, int line);
    Kind kind;
    int line;
};

// One source line: a label, an instruction, a directive, or a combination.
struct AsmLine {
    std::optional<std::string> label;
    std::string mnemonic;                // "" for label-only / directive lines
    std::vector<std::string> operands;
    std::string directive;               // ".word", ".space", ".entry"
    std::vector<int> directive_args;     // .word values / .space size
    std::string directive_label_arg;     // .entry label form
    int source_line = 0;                 // .mhl line that produced this, 0 = none
    int text_line = 0;                   // line number within the assembly text
};

struct AssemblyProgram {
    std::vector<AsmLine> lines;
};

struct SourceMapEntry {
    int asm_line = 0;     // 1-based index into the assembly text
    int source_line = 0;  // 0 = no high-level source attribution
};

struct MachineImage {
    std::array<uint16_t, isa::kMemWords> words{};
    uint16_t entry_point = 0;
    std::map<uint16_t, SourceMapEntry> source_map;     // instruction address -> lines
    std::map<std::string, std::pair<uint16_t, uint16_t>> symbols;  // name -> (addr, words)

    std::vector<uint8_t> serialize() const;
    static MachineImage deserialize(const std::vector<uint8_t>& bytes);
    void save(const std::string& path) const;
    static MachineImage load(const std::string& path);
};

// Text format: one instruction per line, "; " comments, "label:" prefixes,
// directives ".word v...", ".space n", ".entry label|addr". A trailing
// "; src:N" comment attaches the originating source line.
AssemblyProgram parse_assembly(const std::string& text);
std::string format_assembly(const AssemblyProgram& prog);

MachineImage assemble(const AssemblyProgram& prog);
AssemblyProgram disassemble(const MachineImage& img);

} // namespace emst::asmx
