from qiskit import QuantumCircuit
from qiskit_aer import AerSimulator

MARKED = "101"
ITERATIONS = 2


def phase_oracle(marked):
    n = len(marked)
    oracle = QuantumCircuit(n)
    for i, bit in enumerate(reversed(marked)):
        if bit == "0":
            oracle.x(i)
    oracle.h(n - 1)
    oracle.mcx(list(range(n - 1)), n - 1)
    oracle.h(n - 1)
    for i, bit in enumerate(reversed(marked)):
        if bit == "0":
            oracle.x(i)
    return oracle


def diffuser(n):
    circuit = QuantumCircuit(n)
    circuit.h(range(n))
    circuit.x(range(n))
    circuit.h(n - 1)
    circuit.mcx(list(range(n - 1)), n - 1)
    circuit.h(n - 1)
    circuit.x(range(n))
    circuit.h(range(n))
    return circuit


def grover_circuit(marked, iterations):
    n = len(marked)
    circuit = QuantumCircuit(n, n)
    circuit.h(range(n))
    for _ in range(iterations):
        circuit.compose(phase_oracle(marked), inplace=True)
        circuit.compose(diffuser(n), inplace=True)
    circuit.measure(range(n), range(n))
    return circuit


circuit = grover_circuit(MARKED, ITERATIONS)
counts = AerSimulator().run(circuit, shots=1024).result().get_counts()
print(counts)
