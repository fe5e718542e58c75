import cirq

HIDDEN = "1101"


def bernstein_vazirani_circuit(hidden):
    n = len(hidden)
    qubits = cirq.LineQubit.range(n)
    target = cirq.LineQubit(n)
    circuit = cirq.Circuit()
    circuit.append(cirq.X(target))
    circuit.append(cirq.H.on_each(*qubits, target))
    for q, bit in zip(qubits, hidden):
        if bit == "1":
            circuit.append(cirq.CNOT(q, target))
    circuit.append(cirq.H.on_each(*qubits))
    circuit.append(cirq.measure(*qubits, key="result"))
    return circuit


circuit = bernstein_vazirani_circuit(HIDDEN)
result = cirq.Simulator().run(circuit, repetitions=100)
print(result.histogram(key="result"))
