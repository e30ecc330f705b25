"""Matrices transcribed from the m = 3 illustration and the m = 4 example."""

M_P24 = [
    ["a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1", "a3", "0"],
    ["a0*t^2", "a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2", "0"],
    ["0", "a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1", "a3"],
    ["0", "a0*t^2", "a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2"],
]

# M(P,2,4) with row and column l removed, as displayed
M_P24_MINORS = {
    1: [["a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2", "0"],
        ["a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1", "a3"],
        ["a0*t^2", "a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2"]],
    2: [["a1*t^2 - 2*a0*t", "a3", "0"],
        ["0", "a3*t^2 - 2*a2*t + a1", "a3"],
        ["0", "a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2"]],
    3: [["a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1", "0"],
        ["a0*t^2", "a2*t^2 - 2*a1*t + a0", "0"],
        ["0", "a0*t^2", "-2*a3*t + a2"]],
    4: [["a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1", "a3"],
        ["a0*t^2", "a2*t^2 - 2*a1*t + a0", "-2*a3*t + a2"],
        ["0", "a1*t^2 - 2*a0*t", "a3*t^2 - 2*a2*t + a1"]],
}

B_TABLE = {
    (1, 1): [["a1", "a2", "0"], ["a0", "a1", "a3"], ["0", "a0", "a2"]],
    (1, 2): [["a0", "a3", "0"], ["0", "a2", "a3"], ["0", "a1", "a2"]],
    (1, 3): [["a0", "a2", "0"], ["0", "a1", "0"], ["0", "a0", "a3"]],
    (2, 1): [["a0", "a3", "0"], ["0", "a1", "a3"], ["0", "a0", "a2"]],
    (2, 2): [["0", "0", "0"], ["0", "a2", "a3"], ["0", "a1", "a2"]],
    (2, 3): [["0", "a3", "0"], ["0", "a1", "0"], ["0", "a0", "a3"]],
    # the displayed (2,3) entry is a3; the t-free part of the corresponding
    # entry of the displayed M(P,2,4)_3 is 0
    (3, 1): [["a0", "a1", "0"], ["0", "a0", "a3"], ["0", "0", "a2"]],
    (3, 2): [["0", "a2", "0"], ["0", "a1", "0"], ["0", "0", "a2"]],
    (3, 3): [["0", "a1", "0"], ["0", "a0", "0"], ["0", "0", "a3"]],
    (4, 1): [["a0", "a1", "a3"], ["0", "a0", "a2"], ["0", "0", "a1"]],
    (4, 2): [["0", "a2", "a3"], ["0", "a1", "a2"], ["0", "a0", "a1"]],
    (4, 3): [["0", "a1", "0"], ["0", "a0", "a3"], ["0", "0", "a2"]],
}

B_31_CONSISTENT = [["a0", "a1", "0"], ["0", "a0", "0"], ["0", "0", "a2"]]

# m = 4: det B(1,1)_{2,1} = sum over u of det B(1,u)_1
QUADRUPLE = {
    "b11_21": [["a2", "a4", "0"], ["a0", "a2", "a4"], ["0", "a1", "a3"]],
    2: [["a2", "a3", "0"], ["a1", "a2", "a4"], ["a0", "a1", "a3"]],
    3: [["a1", "a4", "0"], ["a0", "a3", "a4"], ["0", "a2", "a3"]],
    4: [["a1", "a3", "0"], ["a0", "a2", "0"], ["0", "a1", "a4"]],
}
