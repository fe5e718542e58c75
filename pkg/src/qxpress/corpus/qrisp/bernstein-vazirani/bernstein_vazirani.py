from qrisp import QuantumVariable, cx, h, x

HIDDEN = "1101"


def bernstein_vazirani(hidden):
    inputs = QuantumVariable(len(hidden))
    target = QuantumVariable(1)
    x(target)
    h(inputs)
    h(target)
    for i, bit in enumerate(hidden):
        if bit == "1":
            cx(inputs[i], target)
    h(inputs)
    return inputs.get_measurement()


print(bernstein_vazirani(HIDDEN))
