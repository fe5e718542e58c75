import cirq

MARKED = "101"
ITERATIONS = 2


def phase_oracle(qubits, marked):
    for q, bit in zip(qubits, marked):
        if bit == "0":
            yield cirq.X(q)
    yield cirq.Z(qubits[-1]).controlled_by(*qubits[:-1])
    for q, bit in zip(qubits, marked):
        if bit == "0":
            yield cirq.X(q)


def diffuser(qubits):
    yield cirq.H.on_each(*qubits)
    yield cirq.X.on_each(*qubits)
    yield cirq.Z(qubits[-1]).controlled_by(*qubits[:-1])
    yield cirq.X.on_each(*qubits)
    yield cirq.H.on_each(*qubits)


def grover_circuit(marked, iterations):
    qubits = cirq.LineQubit.range(len(marked))
    circuit = cirq.Circuit()
    circuit.append(cirq.H.on_each(*qubits))
    for _ in range(iterations):
        circuit.append(phase_oracle(qubits, marked))
        circuit.append(diffuser(qubits))
    circuit.append(cirq.measure(*qubits, key="result"))
    return circuit


circuit = grover_circuit(MARKED, ITERATIONS)
result = cirq.Simulator().run(circuit, repetitions=100)
print(result.histogram(key="result"))
