import cirq

N_QUBITS = 3


def constant_oracle(qubits, target):
    yield cirq.X(target)


def balanced_oracle(qubits, target):
    for q in qubits:
        yield cirq.CNOT(q, target)


def deutsch_jozsa_circuit(oracle, qubits, target):
    circuit = cirq.Circuit()
    circuit.append(cirq.X(target))
    circuit.append(cirq.H.on_each(*qubits, target))
    circuit.append(oracle(qubits, target))
    circuit.append(cirq.H.on_each(*qubits))
    circuit.append(cirq.measure(*qubits, key="result"))
    return circuit


qubits = cirq.LineQubit.range(N_QUBITS)
target = cirq.LineQubit(N_QUBITS)
circuit = deutsch_jozsa_circuit(balanced_oracle, qubits, target)
result = cirq.Simulator().run(circuit, repetitions=100)
print(result.histogram(key="result"))
