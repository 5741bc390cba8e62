import tensorflow as tf

for step in range(10):
    noise = tf.random.uniform([2, 2])
    drop = tf.nn.dropout(noise, rate=0.5)
