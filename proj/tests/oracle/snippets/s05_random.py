import tensorflow as tf

for step in range(4):
    noise = tf.random.uniform([2, 2])
    tf.nn.relu(noise)
