#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace emst::isa {

// 16-bit words, 8 registers (r0 hardwired to zero), 12-bit unified
// address space. Encodings:
//   R  [15:12]=op [11:9]=rd [8:6]=rs [5:3]=rt [2:0]=0
//   I  [15:12]=op [11:9]=rd [8:0]=simm9          (LOADI, JZ, JN)
//   M  [15:12]=op [11:9]=rd [8:6]=rs [5:0]=simm6 (LOAD, STORE)
//   J  [15:12]=op [11:0]=addr12                  (JMP)
//   P  [15:12]=op [11:9]=rd [2:0]=port           (IN, OUT)
// JZ/JN immediates are pc-relative: target = (addr_of_branch + 1 + simm9) mod 4096.
// HALT is the all-zero word; any other opcode-0 word is an illegal instruction.

inline constexpr int kMemWords = 4096;
inline constexpr int kNumRegs = 8;
inline constexpr uint16_t kAddrMask = 0x0FFF;

enum class Opcode : uint8_t {
    Halt = 0,
    Loadi = 1,
    Load = 2,
    Store = 3,
    Add = 4,
    Sub = 5,
    And = 6,
    Or = 7,
    Xor = 8,
    Not = 9,
    Jmp = 10,
    Jz = 11,
    Jn = 12,
    In = 13,
    Out = 14,
    Reserved = 15,
};

const char* mnemonic(Opcode op);
std::optional<Opcode> opcode_from_mnemonic(const std::string& m);

struct Decoded {
    uint16_t raw = 0;
    Opcode op = Opcode::Halt;
    int rd = 0, rs = 0, rt = 0;
    int simm9 = 0;      // sign-extended [8:0]
    int simm6 = 0;      // sign-extended [5:0]
    uint16_t addr12 = 0;
    int port = 0;
    bool illegal = false;   // Reserved, or opcode 0 with a nonzero word
};

Decoded decode(uint16_t word);

uint16_t encode_r(Opcode op, int rd, int rs, int rt);
uint16_t encode_i(Opcode op, int rd, int simm9);
uint16_t encode_m(Opcode op, int rd, int rs, int simm6);
uint16_t encode_j(Opcode op, uint16_t addr12);
uint16_t encode_p(Opcode op, int rd, int port);

inline bool fits_simm9(int v) { return v >= -256 && v <= 255; }
inline bool fits_simm6(int v) { return v >= -32 && v <= 31; }

} // namespace emst::isa
