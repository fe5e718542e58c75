from qrisp import QuantumVariable, control, h, x, z

MARKED = "101"
ITERATIONS = 2


def phase_oracle(qv, marked):
    for i, bit in enumerate(marked):
        if bit == "0":
            x(qv[i])
    with control(qv[:-1]):
        z(qv[-1])
    for i, bit in enumerate(marked):
        if bit == "0":
            x(qv[i])


def diffuser(qv):
    h(qv)
    x(qv)
    with control(qv[:-1]):
        z(qv[-1])
    x(qv)
    h(qv)


def grover(marked, iterations):
    qv = QuantumVariable(len(marked))
    h(qv)
    for _ in range(iterations):
        phase_oracle(qv, marked)
        diffuser(qv)
    return qv.get_measurement()


print(grover(MARKED, ITERATIONS))
