from qrisp import QuantumVariable, cx, h

HIDDEN = "101"


def simon_oracle(inputs, outputs, hidden):
    for i in range(len(hidden)):
        cx(inputs[i], outputs[i])
    flag = hidden.index("1")
    for i, bit in enumerate(hidden):
        if bit == "1":
            cx(inputs[flag], outputs[i])


def simon(hidden):
    n = len(hidden)
    inputs = QuantumVariable(n)
    outputs = QuantumVariable(n)
    h(inputs)
    simon_oracle(inputs, outputs, hidden)
    h(inputs)
    return inputs.get_measurement()


print(simon(HIDDEN))
