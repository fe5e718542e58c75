from qiskit import QuantumCircuit
from qiskit_aer import AerSimulator

HIDDEN = "1101"


def bernstein_vazirani_circuit(hidden):
    n = len(hidden)
    circuit = QuantumCircuit(n + 1, n)
    circuit.x(n)
    circuit.h(range(n + 1))
    for i, bit in enumerate(reversed(hidden)):
        if bit == "1":
            circuit.cx(i, n)
    circuit.h(range(n))
    circuit.measure(range(n), range(n))
    return circuit


circuit = bernstein_vazirani_circuit(HIDDEN)
counts = AerSimulator().run(circuit, shots=1024).result().get_counts()
print(counts)
