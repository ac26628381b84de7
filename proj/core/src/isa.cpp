#include "emst/isa.hpp"

#include <array>

namespace emst::isa {

namespace {
constexpr std::array<const char*, 16> kMnemonics = {
    "HALT", "LOADI", "LOAD", "STORE", "ADD", "SUB", "AND", "OR",
    "XOR", "NOT", "JMP", "JZ", "JN", "IN", "OUT", "RES",
};

int sext(uint16_t v, int bits) {
    int x = v & ((1u << bits) - 1);
    if (x & (1 << (bits - 1))) x -= 1 << bits;
    return x;
}
} // namespace

const char* mnemonic(Opcode op) { return kMnemonics[static_cast<int>(op) & 15]; }

std::optional<Opcode> opcode_from_mnemonic(const std::string& m) {
    for (int i = 0; i < 15; ++i) {
        if (m == kMnemonics[i]) return static_cast<Opcode>(i);
    }
    return std::nullopt;
}

Decoded decode(uint16_t word) {
    Decoded d;
    d.raw = word;
    d.op = static_cast<Opcode>(word >> 12);
    d.rd = (word >> 9) & 7;
    d.rs = (word >> 6) & 7;
    d.rt = (word >> 3) & 7;
    d.simm9 = sext(word, 9);
    d.simm6 = sext(word, 6);
    d.addr12 = word & kAddrMask;
    d.port = word & 7;
    d.illegal = (d.op == Opcode::Reserved) || (d.op == Opcode::Halt && word != 0);
    return d;
}

uint16_t encode_r(Opcode op, int rd, int rs, int rt) {
    return static_cast<uint16_t>((static_cast<int>(op) << 12) | ((rd & 7) << 9) |
                                 ((rs & 7) << 6) | ((rt & 7) << 3));
}

uint16_t encode_i(Opcode op, int rd, int simm9) {
    return static_cast<uint16_t>((static_cast<int>(op) << 12) | ((rd & 7) << 9) |
                                 (simm9 & 0x1FF));
}

uint16_t encode_m(Opcode op, int rd, int rs, int simm6) {
    return static_cast<uint16_t>((static_cast<int>(op) << 12) | ((rd & 7) << 9) |
                                 ((rs & 7) << 6) | (simm6 & 0x3F));
}

uint16_t encode_j(Opcode op, uint16_t addr12) {
    return static_cast<uint16_t>((static_cast<int>(op) << 12) | (addr12 & kAddrMask));
}

uint16_t encode_p(Opcode op, int rd, int port) {
    return static_cast<uint16_t>((static_cast<int>(op) << 12) | ((rd & 7) << 9) |
                                 (port & 7));
}

} // namespace emst::isa
