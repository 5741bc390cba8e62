import tensorflow as tf

inp = tf.constant([[1.0, 1.0]])
weight = tf.Variable([[1.0, 1.0], [1.0, 1.0]])
y = tf.matmul(inp, weight)
loss = tf.reduce_sum(y)
train = tf.train.GradientDescentOptimizer(0.1).minimize(loss)
sess = tf.Session()
for epoch in range(1000):
    sess.run(train)
