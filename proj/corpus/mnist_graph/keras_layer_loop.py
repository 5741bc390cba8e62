from tensorflow import keras

features = keras.Input(shape=(8,))
outputs = []
for head in range(3):
    layer = keras.layers.Dense(4)  # expect: RNC001
    outputs.append(layer(features))
