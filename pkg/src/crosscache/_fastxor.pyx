# cython: boundscheck=False, wraparound=False, cdivision=True
"""C kernel for XOR-accumulating equal-length byte blocks out of a flat buffer."""


def xor_accumulate(unsigned char[::1] dst, const unsigned char[::1] src,
                   offsets, Py_ssize_t length):
    """dst[:length] ^= XOR of src[o:o+length] for every offset o."""
    cdef Py_ssize_t n = len(offsets)
    cdef Py_ssize_t i, j, off
    if length < 0 or length > dst.shape[0]:
        raise ValueError("length out of range for destination")
    for i in range(n):
        off = offsets[i]
        if off < 0 or off + length > src.shape[0]:
            raise ValueError("offset out of range for source")
        for j in range(length):
            dst[j] ^= src[off + j]
