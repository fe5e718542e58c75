from qrisp import QuantumVariable, cx, h, x

N_QUBITS = 3


def constant_oracle(inputs, target):
    x(target)


def balanced_oracle(inputs, target):
    for qubit in inputs:
        cx(qubit, target)


def deutsch_jozsa(oracle, n):
    inputs = QuantumVariable(n)
    target = QuantumVariable(1)
    x(target)
    h(inputs)
    h(target)
    oracle(inputs, target)
    h(inputs)
    return inputs.get_measurement()


print(deutsch_jozsa(constant_oracle, N_QUBITS))
print(deutsch_jozsa(balanced_oracle, N_QUBITS))
