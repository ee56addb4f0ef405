#!/usr/bin/env python3
"""Regenerates the wire fixture vectors in this directory.

Frames are assembled with struct directly from the format table in the
README, independently of the C++ codec. Each .hex file holds comment lines,
an `expect:` line, optional `type:`/`dim:` lines for valid frames, and the
frame bytes as whitespace-separated hex.
"""

import pathlib
import random
import struct

HERE = pathlib.Path(__file__).resolve().parent
MAGIC = b"GEG1"


def header(msg_type, dim, length, magic=MAGIC):
    return magic + struct.pack(">BBI", msg_type, dim, length)


def frame(msg_type, dim, payload, magic=MAGIC, length=None):
    return header(msg_type, dim, len(payload) if length is None else length, magic) + bytes(payload)


def matrix_bytes(rng, dim, count=1):
    return [rng.randrange(251) for _ in range(count * dim * dim)]


def identity(dim):
    return [1 if r == c else 0 for r in range(dim) for c in range(dim)]


def write(name, comment, data, expect, msg_type=None, dim=None):
    lines = [f"# {comment}", f"expect: {expect}"]
    if msg_type is not None:
        lines.append(f"type: {msg_type:02x}")
        lines.append(f"dim: {dim:02x}")
    hexed = data.hex()
    for i in range(0, len(hexed), 64):
        lines.append(" ".join(hexed[j:j + 2] for j in range(i, min(i + 64, len(hexed)), 2)))
    (HERE / f"{name}.hex").write_text("\n".join(lines) + "\n")


def main():
    rng = random.Random(20240611)

    write("ok_basis_identity_d8", "basis matrix, identity, d=8",
          frame(0x01, 8, identity(8)), "ok", 0x01, 8)
    write("ok_generator_d2", "generator matrix 1 2 / 3 4, d=2",
          frame(0x02, 2, [1, 2, 3, 4]), "ok", 0x02, 2)
    write("ok_token_initial_d3", "initial token, random entries, d=3",
          frame(0x03, 3, matrix_bytes(rng, 3)), "ok", 0x03, 3)
    write("ok_session_open_d8", "session-open token, random entries, d=8",
          frame(0x04, 8, matrix_bytes(rng, 8)), "ok", 0x04, 8)
    write("ok_session_ack_d4", "session-ack token with extreme entries 0 and 250, d=4",
          frame(0x05, 4, [0, 250] * 8), "ok", 0x05, 4)
    write("ok_cipher_block_d2", "cipher block y1 || y2, d=2",
          frame(0x06, 2, [1, 0, 0, 1, 250, 249, 248, 247]), "ok", 0x06, 2)
    write("ok_cipher_block_d16", "cipher block y1 || y2, random entries, d=16",
          frame(0x06, 16, matrix_bytes(rng, 16, 2)), "ok", 0x06, 16)
    write("ok_context_p251_d8", "context parameters d=8, p=251",
          frame(0x07, 8, [251]), "ok", 0x07, 8)
    write("ok_context_p7_d2", "context parameters d=2, p=7",
          frame(0x07, 2, [7]), "ok", 0x07, 2)

    write("err_bad_magic", "magic GEX1",
          frame(0x01, 2, [1, 0, 0, 1], magic=b"GEX1"), "error bad_magic")
    write("err_unsupported_version", "magic GEG2, otherwise valid",
          frame(0x01, 2, [1, 0, 0, 1], magic=b"GEG2"), "error unsupported_version")
    write("err_unknown_type_00", "message type 0x00",
          frame(0x00, 2, [1, 0, 0, 1]), "error unknown_type")
    write("err_unknown_type_08", "message type 0x08",
          frame(0x08, 2, [1, 0, 0, 1]), "error unknown_type")
    write("err_dim_1", "dimension 1",
          frame(0x01, 1, [1]), "error bad_dimension")
    write("err_dim_17", "dimension 17",
          frame(0x01, 17, [0] * 289), "error bad_dimension")
    write("err_length_mismatch", "declared length 5 for a d=2 matrix",
          frame(0x01, 2, [1, 0, 0, 1, 0]), "error bad_payload_length")
    write("err_cipher_single_matrix", "cipher block carrying only one matrix",
          frame(0x06, 2, [1, 0, 0, 1]), "error bad_payload_length")
    write("err_truncated_payload", "d=2 matrix frame missing its last payload byte",
          frame(0x01, 2, [1, 0, 0, 1])[:-1], "error truncated")
    write("err_truncated_header", "header cut after the type byte",
          frame(0x01, 2, [1, 0, 0, 1])[:5], "error truncated")
    write("err_byte_251", "matrix entry 251",
          frame(0x02, 2, [1, 251, 0, 1]), "error byte_out_of_range")
    write("err_byte_255", "matrix entry 255 in y2 of a cipher block",
          frame(0x06, 2, [1, 0, 0, 1, 0, 0, 0, 255]), "error byte_out_of_range")
    write("err_trailing_byte", "valid d=2 frame followed by one extra byte",
          frame(0x01, 2, [1, 0, 0, 1]) + b"\x00", "error trailing_bytes")
    write("err_context_p250", "context parameters with composite p=250",
          frame(0x07, 8, [250]), "error unsupported_modulus")


if __name__ == "__main__":
    main()
