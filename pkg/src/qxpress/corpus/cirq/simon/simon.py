import cirq

HIDDEN = "101"


def simon_oracle(inputs, outputs, hidden):
    ops = [cirq.CNOT(q, t) for q, t in zip(inputs, outputs)]
    flag = hidden.index("1")
    for t, bit in zip(outputs, hidden):
        if bit == "1":
            ops.append(cirq.CNOT(inputs[flag], t))
    return ops


def simon_circuit(hidden):
    n = len(hidden)
    inputs = cirq.LineQubit.range(n)
    outputs = cirq.LineQubit.range(n, 2 * n)
    circuit = cirq.Circuit()
    circuit.append(cirq.H.on_each(*inputs))
    circuit.append(simon_oracle(inputs, outputs, hidden))
    circuit.append(cirq.measure(*outputs, key="oracle"))
    circuit.append(cirq.H.on_each(*inputs))
    circuit.append(cirq.measure(*inputs, key="result"))
    return circuit


circuit = simon_circuit(HIDDEN)
result = cirq.Simulator().run(circuit, repetitions=100)
print(result.histogram(key="result"))
